"""
Exact arithmetic over F_q[t] and F_q((1/t)), the PGL_2(F_q[t])-action on boundary
triples of the Bruhat-Tits tree, and the strong fundamental domain for that action.
"""
