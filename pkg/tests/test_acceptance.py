"""Acceptance suite: the headline identities, one verdict line each.

Every test prints `criterion NN [PASS|FAIL] <label>` before asserting,
so a plain pytest run yields one line per criterion.  Checks are
accumulated rather than asserted mid-flight; a criterion only reports
after all of its evidence is in.
"""

import time

import numpy as np

from hodgekit import clifford as cl
from hodgekit import curvature as cv
from hodgekit import dynamics as dyn
from hodgekit import gns
from hodgekit import linalg
from hodgekit import states as st
from hodgekit.einstein import check_einstein_vacuum, make_refinement, solve_einstein_vacuum

from gamma_oracle import brute_force_gamma, random_rank_state

E6 = np.eye(6)


class Criterion:
    def __init__(self, num, label):
        self.num = num
        self.label = label
        self.failures = []

    def check(self, cond, msg):
        if not cond:
            self.failures.append(msg)

    def conclude(self):
        ok = not self.failures
        print(f"criterion {self.num:02d} [{'PASS' if ok else 'FAIL'}] {self.label}")
        assert ok, f"criterion {self.num:02d}: " + "; ".join(self.failures)


def _split_refinement():
    return make_refinement(cv.SPLIT_STAR)


def test_criterion_01_cosmological_constant_identity():
    crit = Criterion(1, "tau(R) = Lambda/3 and vacuum check on round spheres")
    ref = _split_refinement()
    start = time.perf_counter()
    for radius in (0.5, 1.0, 2.0):
        model = cv.exemplar("s4", radius)
        lam = model.expected_lambda
        tau = cv.tau_operator([(1.0, model.matrix)])
        crit.check(abs(tau - lam / 3.0) < 1e-12, f"tau gap at r={radius}")
        report = check_einstein_vacuum(model.matrix, ref, tol=1e-12)
        crit.check(report.solves, f"vacuum check fails at r={radius}")
        crit.check(report.self_adjoint_residual < 1e-12, f"self-adjoint residual r={radius}")
        crit.check(report.bianchi_residual < 1e-12, f"bianchi residual r={radius}")
        crit.check(report.einstein_residual < 1e-12, f"einstein residual r={radius}")
        crit.check(abs(report.lam - lam) < 1e-12, f"lambda mismatch r={radius}")
    crit.check(time.perf_counter() - start < 1.0, "runtime exceeded 1 s")
    crit.conclude()


def test_criterion_02_energy_formula():
    crit = Criterion(2, "flow energy E = (pi/6) Lambda on the exemplars")
    gen = dyn.hodge_generator(_split_refinement())
    cases = (
        (cv.exemplar("s4", 1.0), np.pi / 2.0),
        (cv.exemplar("cp2", 1.0), np.pi),
        (cv.exemplar("t4_flat"), 0.0),
    )
    for model, want in cases:
        e = dyn.energy(gen, model.matrix)
        crit.check(abs(e - want) < 1e-12, f"energy of {model.name} is {e!r}, want {want!r}")
        crit.check(
            abs(e - np.pi * model.expected_lambda / 6.0) < 1e-12,
            f"energy of {model.name} differs from pi*Lambda/6",
        )
    crit.conclude()


def test_criterion_03_bianchi_trace_identity():
    crit = Criterion(3, "tau(R star) vanishes on all families; star witness fails at 1")
    rng = np.random.default_rng(100)
    for _ in range(20):
        r = float(rng.uniform(0.4, 3.0))
        r1, r2 = rng.uniform(0.4, 3.0, 2)
        lam = float(rng.uniform(0.4, 5.0))
        draws = [
            cv.exemplar("s4", r),
            cv.exemplar("t4_flat"),
            cv.exemplar("s2xs2", float(r1), float(r2)),
            cv.exemplar("cp2", lam),
        ]
        for model in draws:
            res = cv.bianchi_residual(model.matrix)
            crit.check(res < 1e-12, f"bianchi {res!r} on {model.name}{model.params}")
    skew = cv.exemplar("s2xs2", 1.0, 2.0)
    crit.check(not skew.expected_einstein, "s2xs2(1,2) should be non-Einstein")
    crit.check(cv.bianchi_residual(skew.matrix) < 1e-12, "bianchi on s2xs2(1,2)")
    witness = check_einstein_vacuum(cv.SPLIT_STAR, _split_refinement())
    crit.check(not witness.solves, "Q = star must fail")
    crit.check(witness.bianchi_residual == 1.0, "witness residual must be exactly 1")
    crit.conclude()


def test_criterion_04_einstein_test_equivalence():
    crit = Criterion(4, "commutator, Ric0 and fixed-point probes agree everywhere")
    gen = dyn.hodge_generator(_split_refinement())
    cases = [
        cv.exemplar("s4", 0.5),
        cv.exemplar("s4", 1.0),
        cv.exemplar("t4_flat"),
        cv.exemplar("s2xs2", 1.0, 1.0),
        cv.exemplar("s2xs2", 1.0, 2.0),
        cv.exemplar("s2xs2", 2.0, 0.5),
        cv.exemplar("cp2", 1.0),
        cv.exemplar("cp2", 3.0),
    ]
    for model in cases:
        r = model.matrix
        fp = dyn.is_fixed_point(gen, r)
        verdicts = (
            fp.commutator_norm <= 1e-10,
            cv.ric0_norm(r) <= 1e-10,
            fp.flow_residual <= 1e-10,
        )
        crit.check(len(set(verdicts)) == 1, f"probes disagree on {model.name}{model.params}")
        crit.check(
            verdicts[0] == model.expected_einstein,
            f"wrong verdict on {model.name}{model.params}",
        )
    skew = cv.exemplar("s2xs2", 1.0, 2.0)
    fp = dyn.is_fixed_point(gen, skew.matrix)
    crit.check(fp.commutator_norm > 0.1, "skew product commutator must exceed 0.1")
    crit.check(cv.ric0_norm(skew.matrix) > 1e-10, "skew product Ric0 must fail")
    crit.check(fp.flow_residual > 1e-10, "skew product flow must fail")
    crit.conclude()


def test_criterion_05_vacuum_solver():
    crit = Criterion(5, "averaging solver on 100 random inputs per dimension")
    rng = np.random.default_rng(101)
    start = time.perf_counter()
    for dim in (6, 8):
        for _ in range(5):
            a = linalg.random_matrix(rng, dim)
            q_frame, _ = np.linalg.qr(a)
            signs = np.diag([1.0] * (dim // 2) + [-1.0] * (dim // 2))
            ref = make_refinement(q_frame @ signs @ q_frame.conj().T)
            solutions = []
            for _ in range(20):
                b = linalg.random_matrix(rng, dim)
                q = solve_einstein_vacuum(b, ref)
                solutions.append(q)
                report = check_einstein_vacuum(q, ref, tol=1e-10)
                crit.check(report.solves, f"solver output fails at dim {dim}")
                gap = abs(linalg.normalized_trace(q).real - linalg.normalized_trace(b).real)
                crit.check(gap < 1e-12, f"trace gap {gap!r} at dim {dim}")
            for q in solutions[:4]:
                res = linalg.frobenius(solve_einstein_vacuum(q, ref) - q)
                crit.check(res < 1e-10, f"idempotence residual {res!r} at dim {dim}")
            for _ in range(4):
                x = linalg.random_matrix(rng, dim)
                y = linalg.random_matrix(rng, dim)
                c = float(rng.standard_normal())
                lin = linalg.frobenius(
                    solve_einstein_vacuum(x + c * y, ref)
                    - solve_einstein_vacuum(x, ref)
                    - c * solve_einstein_vacuum(y, ref)
                )
                crit.check(lin < 1e-10, f"linearity residual {lin!r} at dim {dim}")
    crit.check(time.perf_counter() - start < 5.0, "runtime exceeded 5 s")
    crit.conclude()


def test_criterion_06_clifford_tower():
    crit = Criterion(6, "generator relations, span 2^m, exact trace up the tower")
    rng = np.random.default_rng(102)
    for m in range(7):
        for r in range(m + 1):
            sig = cl.QuadraticSignature(r, m - r)
            tower = cl.build_generators(sig)
            rel = cl.relation_residual(tower)
            crit.check(rel < 1e-12, f"relation residual {rel!r} at ({r},{m - r})")
            span = cl.span_dimension(tower)
            crit.check(span == 2**m, f"span {span} != {2**m} at ({r},{m - r})")
        dim = 2 ** ((m + 1) // 2)
        sample = (rng.integers(-9, 10, (dim, dim))
                  + 1j * rng.integers(-9, 10, (dim, dim))).astype(np.complex128)
        base = linalg.normalized_trace(sample)
        for levels in (1, 2, 3):
            lifted = linalg.normalized_trace(cl.embed_up(sample, levels))
            crit.check(lifted == base, f"trace drift at m={m}, level {levels}")
    crit.conclude()


def test_criterion_07_hodge_dynamics():
    crit = Criterion(7, "period two, unitarity, group law, thermal constants")
    gen = dyn.hodge_generator(_split_refinement())
    for t in np.linspace(-2.0, 2.0, 17):
        period = linalg.frobenius(dyn.star_power(gen, t + 2.0) - dyn.star_power(gen, t))
        crit.check(period < 1e-10, f"period residual {period!r} at t={t}")
        w = dyn.star_power(gen, t)
        unit = linalg.frobenius(w @ linalg.adjoint(w) - E6)
        crit.check(unit < 1e-10, f"unitarity residual {unit!r} at t={t}")
    rng = np.random.default_rng(103)
    for _ in range(10):
        s, t = rng.uniform(-2.0, 2.0, 2)
        group = linalg.frobenius(
            dyn.star_power(gen, s) @ dyn.star_power(gen, t) - dyn.star_power(gen, s + t)
        )
        crit.check(group < 1e-10, f"group-law residual {group!r}")
    ft = dyn.formal_temperature()
    crit.check(abs(ft.temperature_kelvin - 7.06e31) / 7.06e31 < 0.01,
               f"temperature {ft.temperature_kelvin!r} off by more than 1%")
    crit.check(abs(ft.period_seconds - 1.07e-43) / 1.07e-43 < 0.01,
               f"period {ft.period_seconds!r} off by more than 1%")
    crit.conclude()


def test_criterion_08_state_stationarity():
    crit = Criterion(8, "self-dual states stationary under base and perturbed flows")
    gen = dyn.hodge_generator(make_refinement(cv.STANDARD_STAR))
    sigma = (1, 0, 0, 0, 0, 1)
    omega = E6[0] + E6[5]
    rng = np.random.default_rng(104)
    samples = [linalg.random_matrix(rng, 6) for _ in range(20)]
    start = time.perf_counter()
    for a in samples:
        d = st.stationarity_derivative(sigma, omega, gen, a)
        crit.check(d < 1e-8, f"base-flow derivative {d!r}")
    for eps in (0.1, -0.1):
        for sign in (1, -1):
            pg = dyn.perturbed_star(gen, eps, sign)
            worst = max(st.perturbed_stationarity(sigma, omega, pg, a) for a in samples)
            crit.check(worst < 1e-8, f"perturbed derivative {worst!r} at eps={eps}, sign={sign}")
    crit.check(time.perf_counter() - start < 2.0, "runtime exceeded 2 s")
    anti = E6[0] - E6[5]
    mixer = np.outer(E6[0], E6[0])
    wit = st.stationarity_derivative(sigma, anti, gen, mixer)
    crit.check(wit > 1e-3, f"anti-self-dual witness too small: {wit!r}")
    pg = dyn.perturbed_star(gen, 0.1, -1)
    wit_p = st.perturbed_stationarity(sigma, anti, pg, mixer)
    crit.check(wit_p > 1e-3, f"perturbed witness too small: {wit_p!r}")
    crit.conclude()


def test_criterion_09_coupling_weight():
    crit = Criterion(9, "GNS coupling weight and induced representation")
    m2 = gns.FiniteAlgebra(((2, 1.0),))

    trace_rep = gns.gns_representation(gns.make_state(m2, [np.eye(2)]))
    crit.check(trace_rep.gamma == 1.0, "trace state gamma must be 1")
    crit.check(trace_rep.faithful, "trace state representation must be faithful")

    corner_rep = gns.gns_representation(gns.make_state(m2, [np.diag([1.0, 0.0])]))
    crit.check(corner_rep.gamma == 0.0, "corner state gamma must be 0")
    crit.check(corner_rep.perp_dim == 0, "corner representation must be trivial")

    alg22 = gns.FiniteAlgebra(((2, 0.5), (2, 0.5)))
    half_rep = gns.gns_representation(
        gns.make_state(alg22, [np.eye(2), np.zeros((2, 2))])
    )
    crit.check(half_rep.gamma == 0.5, "half-killed sum gamma must be 1/2")

    rng = np.random.default_rng(105)
    mixed = gns.FiniteAlgebra(((2, 0.3), (3, 0.45), (1, 0.25)))
    for alg, ranks in (
        (m2, (2,)), (m2, (1,)),
        (alg22, (2, 0)), (alg22, (1, 2)),
        (mixed, (2, 3, 1)), (mixed, (2, 1, 1)), (mixed, (0, 2, 1)),
    ):
        state = random_rank_state(alg, rng, ranks)
        rep = gns.gns_representation(state)
        gamma, oracle_ranks, _, _ = brute_force_gamma(state)
        crit.check(abs(rep.gamma - gamma) < 1e-10, f"gamma oracle gap at ranks {ranks}")
        crit.check(rep.per_summand_ranks == oracle_ranks, f"rank mismatch at {ranks}")
        if rep.perp_dim:
            for _ in range(3):
                x = alg.random_element(rng)
                y = alg.random_element(rng)
                rx, ry = rep.represent(x), rep.represent(y)
                mult = np.linalg.norm(rep.represent(alg.mul(x, y)) - rx @ ry)
                star = np.linalg.norm(rep.represent(alg.adj(x)) - rx.conj().T)
                crit.check(mult < 1e-10, f"rho multiplicativity {mult!r} at {ranks}")
                crit.check(star < 1e-10, f"rho star residual {star!r} at {ranks}")
    crit.conclude()


def test_criterion_10_homology_pairing():
    crit = Criterion(10, "integer homology pairing and the degenerate branch")
    two_pi_i = 2j * np.pi
    for i in range(6):
        sigma = tuple(int(x) for x in E6[i])
        for j in range(6):
            val = st.homology_pairing(sigma, two_pi_i * E6[j])
            want = 1.0 if i == j else 0.0
            crit.check(val == want, f"pairing ({i},{j}) = {val!r}, want {want!r}")
            crit.check(val.imag == 0.0, f"pairing ({i},{j}) not real")
    combo = st.homology_pairing((2, 0, 0, 0, 0, 1), two_pi_i * (E6[0] + 3.0 * E6[5]))
    crit.check(combo == 5.0, f"bilinear combination gave {combo!r}, want 5")

    degenerate = st.pairing_is_degenerate((1, 0, 0, 0, 0, 0), two_pi_i * E6[1])
    crit.check(degenerate, "zero pairing must flag the degenerate branch")
    live = st.pairing_is_degenerate((1, 0, 0, 0, 0, 0), two_pi_i * E6[0])
    crit.check(not live, "nonzero pairing must not flag the degenerate branch")
    # The degenerate branch is the trivial-representation path: a state
    # whose null ideal swallows everything induces rho on a zero space.
    m2 = gns.FiniteAlgebra(((2, 1.0),))
    trivial = gns.gns_representation(gns.make_state(m2, [np.diag([1.0, 0.0])]))
    crit.check(trivial.perp_dim == 0 and trivial.gamma == 0.0,
               "degenerate branch must collapse the representation")
    crit.conclude()
