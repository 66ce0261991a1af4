# End-to-end TE-PAI resource estimation for the catalog systems.
#
# The cost of a TE-PAI run depends on the target only through lambda*T:
# one fixed angle Delta = arctan(Q / 2 lambda T), N_gate = 2(lambda T)^2/Q + Q
# gates per shot, e^Q sampling overhead. The fault-tolerant layer solves
# the code distance, lays out fast-block patches, and converts to wall time.
from starsmm import hamcat, tepai

print("headline: [4Fe-4S] up to T = 10 a.u. (alpha = 0.1, eps = 0.05, Q = 1)")
fes = hamcat.molecule("4Fe-4S")
est = tepai.estimate(
    tepai.TepaiInstance(lam=fes.lam, t=10.0, n_l=fes.n_l, alpha_model=0.1)
)
print(f"  Delta = {est.delta_angle:.4e}, N_gate = {est.n_gate:.6g}")
print(f"  d = {est.d}, patches = {est.n_patch}, physical qubits = {est.physical_qubits:,}")
print(f"  single shot = {est.single_shot_seconds:.0f} s, "
      f"total = {est.total_seconds / 86400:.2f} days (P_total = {est.p_total:.3f})")

print("\nmolecule catalog at T = 5 a.u.:")
print("  system            N_L   lambda    d   qubits     total [days]")
for entry in hamcat.MOLECULES:
    est = tepai.estimate(
        tepai.TepaiInstance(lam=entry.lam, t=5.0, n_l=entry.n_l, alpha_model=0.1)
    )
    print(f"  {entry.name:15s} {entry.n_l:4d}   {entry.lam:6.1f}  {est.d:3d}"
          f"   {est.physical_qubits:8,}   {est.total_seconds / 86400:10.3f}")

print("\n2D Hubbard (t = 1, U = 4) near the week-scale regime:")
for length, t_ev in ((6, 3.0), (10, 2.0)):
    entry = hamcat.hubbard_entry(1.0, 4.0, length)
    est = tepai.estimate(
        tepai.TepaiInstance(lam=entry.lam, t=t_ev, n_l=entry.n_l, alpha_model=0.1)
    )
    print(f"  {length}x{length} at T = {t_ev}: lambda T = {entry.lam * t_ev:.0f}, d = {est.d},"
          f" qubits = {est.physical_qubits:,}, total = {est.total_seconds / 86400:.2f} days")
