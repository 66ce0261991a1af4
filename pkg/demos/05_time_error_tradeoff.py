# Threshold tuning: the error/time tradeoff of one rotation gate.
#
# Raising the threshold theta_th = 2^n theta_L buys more analog trials
# (cheap, low error at small angles) against a rarer but expensive digital
# stage. Pure synthesis from cultivated magic states is the comparator;
# both sides are costed with full preparation latencies on two patches.
from starsmm import smm, tmr

c1 = smm.calibrate_c1()
params = tmr.TmrParams(k=7, p_ph=1e-3, pass_coeffs=(c1,))
theta_l = 1e-5

print(f"theta_L = {theta_l}:  n   theta_th     P_L         E[clocks]")
best = None
for n in range(0, 16):
    theta_th = 2.0 ** n * theta_l
    if theta_th > smm.MAX_THRESHOLD:
        break
    cfg = smm.SmmConfig(theta_l=theta_l, tmr_params=params, theta_th=theta_th,
                        timing_mode="latency")
    rep = smm.effective_error_rate(cfg)
    print(f"{'':20s}{n:3d}   {theta_th:8.2e}   {rep.p_l:.3e}   {rep.expected_clocks:8.2f}")
    if best is None or rep.p_l < best[0]:
        best = (rep.p_l, rep.expected_clocks, n)

syn_p, syn_t = smm.synthesis_only_gate(delta=2e-9)
print(f"\nsynthesis-only comparator (delta = p_m): P_L = {syn_p:.3e}, {syn_t:.0f} clocks")
print(f"best SMM point (n = {best[2]}): {syn_p / best[0]:.0f}x lower error,"
      f" {syn_t / best[1]:.0f}x faster")
