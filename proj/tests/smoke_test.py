"""Smoke tests for the python module: a few closed-form anchors, the
mixture identities, and simulator agreement at a small sample count."""

import math
import sys

import _nomasic as nm


def approx(a, b, tol):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    s = nm.build_scenario(0.8, 0.0, omega=1.0, rate=1.0)
    assert abs(s.gamma_bar - 1.0) < 1e-12
    assert abs(s.gamma_th - 1.0) < 1e-12

    pts = nm.bpsk_constellation(s)
    x11 = pts[3]
    approx(x11.value, math.sqrt(0.8) + math.sqrt(0.2), 1e-12)

    # Closed-form anchors.
    approx(nm.sic_success_prob(s, x11), 0.8441236, 1e-6)
    approx(nm.second_moment_w(s, x11), 0.785437, 1e-5)
    approx(nm.std_normal_cdf(1.0), 0.8413447461, 1e-9)
    approx(nm.exp_integral_e1(1.0), 0.2193839344, 1e-9)
    approx(nm.psi_kernel(1.0, 0.0), 0.25, 1e-12)

    # Rejections surface as ValueError.
    try:
        nm.build_scenario(0.4, 0.0)
    except ValueError as e:
        assert "alpha1" in str(e)
    else:
        raise AssertionError("expected ValueError for alpha1=0.4")

    # Mixture identity at a point.
    ps = nm.sic_success_prob(s, x11)
    pf = nm.sic_failure_prob(s, x11)
    for beta in (0.3, 1.0, 2.4):
        mix = ps * nm.pdf_beta_success(s, x11, beta) + pf * nm.pdf_beta_failure(
            s, x11, beta
        )
        approx(mix, nm.rayleigh_pdf(beta, 1.0), 1e-12)

    # Outage pieces.
    s10 = nm.build_scenario(0.8, 10.0, rate=1.0)
    approx(nm.outage_given_success(s10, nm.bpsk_constellation(s10)[3]), 0.362260, 1e-5)
    assert nm.outage_given_failure(s10, nm.bpsk_constellation(s10)[3]) == 1.0
    approx(nm.outage_total(s10), 0.3789695, 1e-6)
    approx(nm.legacy_zeta_upper_bound(nm.build_scenario(0.6, 10.0, rate=0.5)),
           1.6095, 1e-3)

    # Capacity anchors.
    approx(nm.ec_total_exact(s10), 1.3854594, 1e-6)
    err = nm.normalized_error_percent(
        nm.ec_total_exact(s10), nm.ec_closed_form_approx(s10)
    )
    assert 0.0 <= err < 5.0

    # Simulator agreement within three standard errors.
    est = nm.simulate_bpsk_outage(s10, samples=200_000, seed=5)
    assert abs(est["mean"] - nm.outage_total(s10)) <= 3.0 * est["stderr"]
    est2 = nm.simulate_bpsk_outage(s10, samples=200_000, seed=5)
    assert est["mean"] == est2["mean"], "seeded runs must be identical"

    # QPSK surface.
    q = nm.quadrant_levels(s, +1, +1)
    approx(nm.qpsk_success_prob(s, q), nm.qpsk_success_prob_exact(s, q), 1e-12)
    st = nm.simulate_qpsk_success_stats(s, q, samples=200_000, seed=6)
    theory = nm.qpsk_second_moment_w(s, q)
    assert abs(st["m2_w"]["mean"] - theory) <= 4.0 * st["m2_w"]["stderr"]

    # Sweep surface.
    table = nm.op_sweep(s10, "snr", 0.0, 10.0, 30.0)
    assert table["columns"] == ["po_exact", "po_legacy"]
    assert len(table["rows"]) == 4

    print("smoke ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
