"""Reference states and the two measures.

Walks through the bipartition-averaged entanglement measures on the built-in
states: GHZ hits the ceiling for 3 qubits, the Higuchi-Sudbery state is the
conjectured 4-qubit optimum, and Brown et al.'s bssb4 state shows why the
von Neumann measure is the sharper tool: it ties hs4 under E_L but not
under E_vN.
"""

import entsearch as es
from entsearch.measures import MeasureKind

LIN, VN = MeasureKind.LINEAR, MeasureKind.VON_NEUMANN


def show(name, state):
    lin = es.e_total(state, LIN)
    vn = es.e_total(state, VN)
    print(f"{name} ({state.n_qubits} qubits)")
    for (m, vl), (_, vv) in zip(lin.per_m, vn.per_m):
        print(f"  m={m}:  E_L^(m) = {vl:.6f}   E_vN^(m) = {vv:.6f}")
    print(f"  total: E_L = {lin.total:.6f}   E_vN = {vn.total:.6f}")
    print()
    return lin.total, vn.total


show("ghz3", es.ghz(3))
el_hs, evn_hs = show("hs4", es.hs4())
el_b, evn_b = show("bssb4", es.bssb4())

print(f"E_L  difference hs4 vs bssb4:  {el_hs - el_b:+.2e}   (a tie: E_L cannot separate them)")
print(f"E_vN difference hs4 vs bssb4:  {evn_hs - evn_b:+.2e}   (hs4 is strictly more entangled)")

# every single-qubit marginal of hs4 is maximally mixed, so E^(1) = 1; the
# halved-register cuts are where the 4-qubit ceiling bites
rho = es.partial_trace(es.hs4(), (0, 1))
print(f"\nhs4 two-qubit marginal purity: {es.purity(rho):.6f} (= 1/3)")
print(f"hs4 two-qubit marginal spectrum: {es.hermitian_eigenvalues(rho).round(6)}")
