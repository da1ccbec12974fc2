"""Where the interlacing lambda_{n+1}(st) <= lambda_n(D) fails.

Three case studies:
  * the unit triangle, a non-bipartite equilateral graph, violates the
    inequality exactly at n = 3, 9, 15, ... (odd multiples of E);
  * the cycle with lengths (5,3,2,2) fails the cycle sign condition for
    the length-5 reference edge, so the sufficient gluing criterion is
    silent even though the inequality itself happens to hold;
  * any single cycle with rational lengths whose scaled total length is
    odd must violate the inequality at that index.
"""
from graphspec import builtin, check_cycle_sign_condition, rational_cycle_counterexample, verify

print("=== unit triangle ===")
print(verify("EQUI_FRIED", builtin("cycle", 1, 1, 1), count=10))

print("\n=== unit 4-cycle (bipartite: no violations) ===")
print(verify("EQUI_FRIED", builtin("cycle", 1, 1, 1, 1), count=16))

print("\n=== cycle(5,3,2,2): cycle sign condition ===")
g = builtin("cycle", 5, 3, 2, 2)
w = check_cycle_sign_condition(g)
for c in w.cycles:
    for ref, signs in sorted(c.per_reference.items()):
        length = g.edges[g.edge_index(ref)].length
        if signs is None:
            print(f"  reference {ref} (length {length:g}): no valid sign choice")
        else:
            print(f"  reference {ref} (length {length:g}): signs {signs}")
print("  sufficient condition holds:", w.sufficient_condition_holds)
print(verify("GLUING", g, count=20))

print("\n=== rational single cycle, odd scaled length ===")
print(rational_cycle_counterexample(builtin("cycle", 0.5, 0.5, 0.5, 0.5, 0.5)))
