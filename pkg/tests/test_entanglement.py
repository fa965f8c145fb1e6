"""ED measures, closed forms, sweeps, and the dual-route verification."""

import json
import math

import numpy as np
import pytest

import oracles
from digraph_ed.digraph import DirectedGraph, generate, graph_hash
from digraph_ed.entanglement import (
    EDReport,
    alpha_sweep,
    ed_closed_form,
    ed_per_vertex,
    ed_total,
    hs_distance,
    pauli_vector_closed_form,
    verify_graph,
    von_neumann_entropy,
)
from digraph_ed.errors import BadGridError, NegativeEigenvalueError, PolicyViolationError
from digraph_ed.statevector import (
    DensityMatrix1Q,
    GateParams,
    PureState,
    build_graph_state,
    init_product_state,
    pauli_expectation,
    reduced_density_1q,
)

INV_SQRT2 = 2**-0.5
SINGLE_EDGE = DirectedGraph(2, ((0, 1),))


class TestEdPerVertex:
    def test_separable_state_is_zero_exactly(self):
        st = init_product_state(4, INV_SQRT2, INV_SQRT2)
        for i in range(4):
            assert ed_per_vertex(st, i) == 0.0

    def test_single_edge_maximal(self):
        st = build_graph_state(SINGLE_EDGE, GateParams(math.pi / 2, 0.3))
        for i in (0, 1):
            assert abs(ed_per_vertex(st, i) - 1.0) < 1e-12

    def test_single_edge_partial(self):
        st = build_graph_state(SINGLE_EDGE, GateParams(math.pi / 3, 0.0))
        assert abs(ed_per_vertex(st, 0) - 0.75) < 1e-12


class TestEdTotal:
    def test_product_state_zero(self):
        assert ed_total(init_product_state(3, INV_SQRT2, INV_SQRT2)) == 0.0
        assert abs(ed_total(init_product_state(3, 0.6, 0.8))) < 1e-12

    def test_single_edge_values(self):
        assert abs(ed_total(build_graph_state(SINGLE_EDGE, GateParams(math.pi / 2, 0.7))) - 1.0) < 1e-12
        assert abs(ed_total(build_graph_state(SINGLE_EDGE, GateParams(math.pi / 3, 0.0))) - 0.75) < 1e-12

    def test_equals_mean_of_per_vertex(self):
        g = generate("erdos_renyi", 6, {"p": 0.5}, seed=2)
        st = build_graph_state(g, GateParams(0.8, 1.1))
        mean = sum(ed_per_vertex(st, i) for i in range(g.M)) / g.M
        assert abs(ed_total(st) - mean) < 1e-12

    def test_matches_dense_oracle(self):
        rng = np.random.default_rng(31)
        for M in (2, 4, 5):
            amps = oracles.random_state(rng, M)
            got = ed_total(PureState(M, amps))
            assert abs(got - oracles.ed_total_dense(amps, M)) < 1e-12


class TestClosedForm:
    def test_zero_angle(self):
        g = generate("erdos_renyi", 7, {"p": 0.5}, seed=9)
        assert ed_closed_form(g, 0.0) == 0.0

    def test_star_arithmetic(self):
        # degrees (2, 1, 1) at theta=pi/4: 1 - (1/4 + 1/2 + 1/2)/3 = 7/12
        got = ed_closed_form(generate("star_out", 3), math.pi / 4)
        assert abs(got - 7.0 / 12.0) < 1e-9

    def test_cycle_arithmetic(self):
        got = ed_closed_form(generate("cycle", 3), math.pi / 4)
        assert abs(got - 0.75) < 1e-9

    def test_dual_route_agreement(self):
        for kind, M in (("star_out", 3), ("cycle", 3), ("complete_dag", 5)):
            g = generate(kind, M)
            gp = GateParams(math.pi / 4, 0.9)
            sv = ed_total(build_graph_state(g, gp))
            assert abs(sv - ed_closed_form(g, gp.theta)) < 1e-10

    def test_refuses_antiparallel(self):
        g = DirectedGraph(2, ((0, 1), (1, 0)))
        with pytest.raises(PolicyViolationError):
            ed_closed_form(g, 0.4)


class TestPauliVectorClosedForm:
    def test_bare_vertex(self):
        v = pauli_vector_closed_form(0, 0, GateParams(1.0, 2.0))
        assert (v.x, v.y, v.z) == (1.0, 0.0, 0.0)

    def test_one_outgoing(self):
        v = pauli_vector_closed_form(1, 0, GateParams(math.pi / 3, 0.0))
        assert abs(v.x - 0.5) < 1e-15
        assert abs(v.y) < 1e-15

    def test_two_incoming(self):
        # cos^2(pi/4) * (cos(pi/2), -sin(pi/2), 0) = (0, -1/2, 0), any psi
        for psi in (0.0, 0.9, -2.0):
            v = pauli_vector_closed_form(0, 2, GateParams(math.pi / 4, psi))
            assert abs(v.x) < 1e-12
            assert abs(v.y + 0.5) < 1e-12
            assert v.z == 0.0

    def test_matches_statevector_on_stars(self):
        gp = GateParams(0.8, 1.3)
        for d in range(1, 7):
            out_star = build_graph_state(generate("star_out", d + 1), gp)
            got = pauli_expectation(out_star, 0)
            want = pauli_vector_closed_form(d, 0, gp)
            assert max(abs(got.x - want.x), abs(got.y - want.y), abs(got.z - want.z)) < 1e-10

            in_star = build_graph_state(generate("star_in", d + 1), gp)
            got = pauli_expectation(in_star, 0)
            want = pauli_vector_closed_form(0, d, gp)
            assert max(abs(got.x - want.x), abs(got.y - want.y), abs(got.z - want.z)) < 1e-10

    def test_mixed_case_phase_resolution(self):
        # Candidate phases for a vertex with both edge directions: the
        # composition d_out*psi + d_in*theta versus the single combined
        # alternative d_in*(psi + theta). The statevector arbitrates: the
        # composition wins wherever the two differ, and the implemented
        # closed form follows it.
        theta, psi = 0.7, 0.4
        for d_out, d_in in ((2, 1), (1, 2), (3, 2)):
            M = 1 + d_out + d_in
            edges = tuple((0, 1 + k) for k in range(d_out)) + tuple(
                (1 + d_out + k, 0) for k in range(d_in)
            )
            gp = GateParams(theta, psi)
            got = pauli_expectation(build_graph_state(DirectedGraph(M, edges), gp), 0)

            r = math.cos(theta) ** (d_out + d_in)
            composed = d_out * psi + d_in * theta
            combined = d_in * (psi + theta)
            assert abs(got.x - r * math.cos(composed)) < 1e-10
            assert abs(got.y + r * math.sin(composed)) < 1e-10
            assert abs(got.x - r * math.cos(combined)) > 1e-3
            # the implemented form must match the winner
            want = pauli_vector_closed_form(d_out, d_in, gp)
            assert abs(got.x - want.x) < 1e-10
            assert abs(got.y - want.y) < 1e-10

    def test_norm_depends_on_total_degree_only(self):
        gp = GateParams(0.9, 1.7)
        norms = {
            (d_out, d_in): pauli_vector_closed_form(d_out, d_in, gp).norm_sq
            for d_out, d_in in ((3, 0), (0, 3), (2, 1), (1, 2))
        }
        ref = math.cos(0.9) ** 6
        for v in norms.values():
            assert abs(v - ref**1) < 1e-12  # all share total degree 3

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            pauli_vector_closed_form(-1, 0, GateParams(0.5, 0.0))


class TestHsDistance:
    def test_maximally_mixed_is_zero(self):
        assert hs_distance(DensityMatrix1Q(0.5, 0.0, 0.0, 0.5)) == 0.0

    def test_plus_projector(self):
        rho = DensityMatrix1Q(0.5, 0.5, 0.5, 0.5)
        assert abs(hs_distance(rho) - 0.5) < 1e-15

    def test_ground_projector(self):
        rho = DensityMatrix1Q(1.0, 0.0, 0.0, 0.0)
        assert abs(hs_distance(rho) - 0.5) < 1e-15

    def test_zero_iff_maximally_mixed(self):
        rho = DensityMatrix1Q(0.5 + 1e-10, 0.0, 0.0, 0.5 - 1e-10)
        assert hs_distance(rho) > 1e-11


class TestVonNeumannEntropy:
    def test_maximally_mixed(self):
        assert abs(von_neumann_entropy(DensityMatrix1Q(0.5, 0.0, 0.0, 0.5)) - math.log(2)) < 1e-15

    def test_pure_state(self):
        assert von_neumann_entropy(DensityMatrix1Q(1.0, 0.0, 0.0, 0.0)) == 0.0
        assert von_neumann_entropy(DensityMatrix1Q(0.5, 0.5, 0.5, 0.5)) < 1e-12

    def test_single_edge_reduced_state(self):
        # eigenvalues {0.75, 0.25}: S = -(3/4)ln(3/4) - (1/4)ln(1/4)
        st = build_graph_state(SINGLE_EDGE, GateParams(math.pi / 3, 0.0))
        s = von_neumann_entropy(reduced_density_1q(st, 0))
        assert abs(s - 0.5623351446188083) < 1e-12

    def test_matches_eigvalsh_oracle(self):
        rng = np.random.default_rng(13)
        for _ in range(15):
            amps = oracles.random_state(rng, 5)
            rho = reduced_density_1q(PureState(5, amps), int(rng.integers(5)))
            lam = np.linalg.eigvalsh(rho.matrix)
            want = -sum(float(x) * math.log(float(x)) for x in lam if x > 1e-15)
            assert abs(von_neumann_entropy(rho) - want) < 1e-12

    def test_negative_eigenvalue_rejected(self):
        rho = DensityMatrix1Q(-0.2, 0.0, 0.0, 1.2)  # trace 1, but not a state
        with pytest.raises(NegativeEigenvalueError):
            von_neumann_entropy(rho)


class TestAlphaSweep:
    def test_optimum_at_balanced_amplitudes(self):
        sweep = alpha_sweep(GateParams(math.pi / 2, 0.0), 101)
        assert sweep.argmax_E == 0.5
        assert sweep.argmax_S == 0.5
        assert sweep.argmin_DHS == 0.5
        assert not sweep.degenerate
        assert sweep.axis == "alpha"
        ts = [s[0] for s in sweep.samples]
        assert ts == sorted(ts) and len(ts) == 101

    def test_endpoint_is_product(self):
        sweep = alpha_sweep(GateParams(math.pi / 2, 0.4), 11)
        t, e, s, d = sweep.samples[0]
        assert t == 0.0
        assert e == 0.0
        assert s == 0.0
        assert abs(d - 0.5) < 1e-15

    def test_peak_value_is_maximal(self):
        sweep = alpha_sweep(GateParams(math.pi / 2, 0.0), 11)
        mid = sweep.samples[5]
        assert mid[0] == 0.5
        assert abs(mid[1] - 1.0) < 1e-12
        assert abs(mid[2] - math.log(2)) < 1e-12
        assert mid[3] < 1e-12

    def test_degenerate_at_identity_gate(self):
        sweep = alpha_sweep(GateParams(0.0, 0.0), 21)
        assert sweep.degenerate
        assert all(abs(s[1]) < 1e-12 for s in sweep.samples)

    def test_monotone_legs_at_right_angle(self):
        sweep = alpha_sweep(GateParams(math.pi / 2, 0.0), 101)
        e = [s[1] for s in sweep.samples[:51]]
        s_ = [s[2] for s in sweep.samples[:51]]
        d = [s[3] for s in sweep.samples[:51]]
        assert all(b > a for a, b in zip(e, e[1:]))
        assert all(b > a for a, b in zip(s_, s_[1:]))
        assert all(b < a for a, b in zip(d, d[1:]))

    def test_amplitude_phases_are_irrelevant(self):
        # the sweep uses real alphas; check criteria are phase-blind
        gp = GateParams(1.1, 0.6)
        rng = np.random.default_rng(3)
        for t in (0.2, 0.5, 0.8):
            a0, a1 = math.sqrt(t), math.sqrt(1 - t)
            st_real = build_graph_state(SINGLE_EDGE, gp, a0, a1)
            ph0, ph1 = np.exp(1j * rng.uniform(-math.pi, math.pi, size=2))
            st_rot = build_graph_state(SINGLE_EDGE, gp, a0 * ph0, a1 * ph1)
            assert abs(ed_total(st_real) - ed_total(st_rot)) < 1e-12
            rho_real = reduced_density_1q(st_real, 0)
            rho_rot = reduced_density_1q(st_rot, 0)
            assert abs(von_neumann_entropy(rho_real) - von_neumann_entropy(rho_rot)) < 1e-12
            assert abs(hs_distance(rho_real) - hs_distance(rho_rot)) < 1e-12

    def test_bad_grid(self):
        with pytest.raises(BadGridError):
            alpha_sweep(GateParams(1.0, 0.0), 2)


class TestVerifyGraph:
    def test_star_report(self):
        rep = verify_graph(generate("star_out", 3), GateParams(math.pi / 4, 0.3))
        assert abs(rep.total_statevector - 7.0 / 12.0) < 1e-9
        assert rep.discrepancy < 1e-10
        assert rep.policy == "default"
        assert rep.graph_hash == graph_hash(generate("star_out", 3))

    def test_orientation_does_not_matter(self):
        chain = DirectedGraph(3, ((0, 1), (1, 2)))
        bent = DirectedGraph(3, ((0, 1), (2, 1)))  # same degree multiset {1, 2, 1}
        gp = GateParams(0.9, 0.2)
        r1 = verify_graph(chain, gp)
        r2 = verify_graph(bent, gp)
        assert abs(r1.total_statevector - r2.total_statevector) < 1e-12

    def test_empty_graph_exact_zero(self):
        rep = verify_graph(DirectedGraph(3, ()), GateParams(1.2, 0.1))
        assert rep.total_statevector == 0.0
        assert rep.total_closed_form == 0.0
        assert rep.discrepancy == 0.0

    def test_escape_hatch_routes_to_statevector_only(self):
        g = DirectedGraph(2, ((0, 1), (1, 0)))
        rep = verify_graph(g, GateParams(0.6, 0.8), allow_antiparallel=True)
        assert rep.total_closed_form is None
        assert rep.discrepancy is None
        assert rep.policy == "allow_antiparallel"
        # dense oracle agrees with the statevector total
        st = build_graph_state(g, GateParams(0.6, 0.8), allow_antiparallel=True)
        assert abs(rep.total_statevector - oracles.ed_total_dense(st.amplitudes, 2)) < 1e-12

    def test_antiparallel_pair_breaks_both_degree_readings(self):
        # For the 2-cycle the per-vertex value is 1 - cos^2(2 theta): the two
        # gates compose into a double-angle interaction, which neither
        # "degree = incident edges" (cos^4) nor "degree = neighbor count"
        # (cos^2) reproduces. This is why the closed form refuses such graphs.
        theta = 0.6
        g = DirectedGraph(2, ((0, 1), (1, 0)))
        st = build_graph_state(g, GateParams(theta, 0.9), allow_antiparallel=True)
        ev = ed_per_vertex(st, 0)
        assert abs(ev - (1.0 - math.cos(2 * theta) ** 2)) < 1e-12
        assert abs(ev - (1.0 - math.cos(theta) ** 4)) > 1e-2
        assert abs(ev - (1.0 - math.cos(theta) ** 2)) > 1e-2

    def test_dual_route_on_seeded_batch(self):
        rng = np.random.default_rng(101)
        for seed in range(10):
            g = generate("erdos_renyi", int(rng.integers(2, 9)), {"p": 0.5}, seed=seed)
            gp = GateParams(float(rng.uniform(0, math.pi)), float(rng.uniform(0, math.pi)))
            rep = verify_graph(g, gp)
            assert rep.discrepancy < 1e-10


class TestEDReportJson:
    def test_keys_and_round_trip(self):
        rep = verify_graph(generate("cycle", 3), GateParams(0.7, 0.2), seed_info="unit test")
        doc = json.loads(rep.to_json())
        assert list(doc) == [
            "per_vertex",
            "total_sv",
            "total_cf",
            "discrepancy",
            "theta",
            "psi",
            "graph_hash",
            "policy",
            "seed_info",
        ]
        assert doc["total_sv"] == rep.total_statevector  # 17 digits round-trip
        assert doc["per_vertex"] == list(rep.per_vertex)
        assert doc["theta"] == rep.gp.theta
        assert doc["seed_info"] == "unit test"

    def test_null_fields_under_escape_hatch(self):
        g = DirectedGraph(2, ((0, 1), (1, 0)))
        rep = verify_graph(g, GateParams(0.6, 0.8), allow_antiparallel=True)
        doc = json.loads(rep.to_json())
        assert doc["total_cf"] is None
        assert doc["discrepancy"] is None
        assert doc["policy"] == "allow_antiparallel"
