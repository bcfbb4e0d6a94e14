"""Combinatorial path lifting and the subgroup K.

A word spells a loop downstairs (letter a_i = once around the i-th
circle).  Its lift walks the graph upstairs: a letter whose index is a
tree label moves to the neighbor, any other letter traverses a loop edge
and stays put.  K is the set of words whose lift returns to the base.
"""

from earring import base_vertex, endpoint, in_k, lift_word
from earring.words import concat, format_word, invert, reduce_word

# a_3 at the base point is a loop edge: the lift goes nowhere, so a_3
# bounds upstairs and lies in K.
trace = lift_word((3,))
print("lift(a_3):", [(s.letter, s.kind) for s in trace.steps],
      "endpoint", format_word(trace.endpoint.word))
print("in_k(a_3) =", in_k((3,)))

# a_1 is a tree label: the lift ends one step away, so a_1 is not in K.
print("in_k(a_1) =", in_k((1,)))

# Lifting is invariant under free reduction: inserting a cancelling pair
# anywhere cannot move the endpoint.
w = (1, 2, 3, -2)
w2 = (1, 5, -5, 2, 3, -2)
print("endpoint", format_word(w), "=", format_word(endpoint(w).word))
print("endpoint", format_word(w2), "=", format_word(endpoint(w2).word))

# The concatenation law: lifting u·v equals lifting v from the endpoint
# of u.
u, v = (1, 2), (3, -2)
lhs = endpoint(concat(u, v))
rhs = lift_word(v, start=endpoint(u)).endpoint
print("concatenation law holds:", lhs == rhs)

# Any word can be completed to a K-member by returning along the tree.
# The loop letter a_3 keeps the completion from collapsing to e.
w = (1, 3, 2)
member = concat(w, invert(endpoint(w).word))
print("completed member", format_word(reduce_word(member)), "in_k =", in_k(member))

# K is closed under products and inverses.
print("in_k(member·member) =", in_k(concat(member, member)))
print("in_k(member^-1)    =", in_k(invert(member)))
print("base vertex:", format_word(base_vertex().word) or "e")
