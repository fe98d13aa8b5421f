from math import comb

import pytest

from utils.bgg import (AnticommutativityViolation, BasisSpace, ComplexSpec, KConditionViolation, NoValidJ,
                       NotAComplex, ShapeMismatch, SNRViolation, alt_family_K, alt_family_diagram, alt_family_rows,
                       cochain_K, cohomology, complement_exactness_check, explicit_representatives,
                       hodge_decompose, hodge_homotopy_K, induced_cohomology_rank, lemma8_identity_check,
                       output_complex, phi_inverse, phi_iso, poincare_constant_estimate, projector_pi,
                       snr_holds, sum_differential, theorem_dimension_check, twisted_cohomology_basis,
                       twisted_differential, validate_K, validate_diagram)
from utils.exactla import LinearMap, column_space_basis, hstack, rank
from utils.proxies import named_complex, named_diagram


def line(dims, diffs, name="line"):
    return ComplexSpec([BasisSpace(f"Z{i}", d) for i, d in enumerate(dims)], diffs, name=name)


@pytest.fixture(scope="module")
def plane():
    return alt_family_diagram(2, 0, 3)


@pytest.fixture(scope="module")
def space3():
    return alt_family_diagram(3, 1, 4)


class TestComplexSpec:
    def test_wrong_shape(self):
        with pytest.raises(ShapeMismatch):
            line([1, 2], [LinearMap.zeros(1, 1)])

    def test_not_a_complex(self):
        c = line([1, 1, 1], [LinearMap.identity(1), LinearMap.identity(1)])
        with pytest.raises(NotAComplex) as err:
            c.validate()
        assert err.value.index == 0
        assert err.value.reason == "NotAComplex"

    def test_out_of_range_operators_are_zero(self):
        c = line([2, 3], [LinearMap.zeros(3, 2)])
        assert c.D(-1).shape == (2, 0)
        assert c.D(1).shape == (0, 3)

    def test_row_cohomology(self, plane):
        report = cohomology(plane.top)
        assert report.dims == [1, 0, 0]
        assert [e.dim for e in report.entries] == plane.top.dims
        assert [r.cols for r in report.representatives] == report.dims

    def test_projector_subspace(self):
        half = LinearMap.from_rows([[1, 0], [0, 0]])
        c = ComplexSpec([BasisSpace("A", 2, half), BasisSpace("B", 1)], [LinearMap.from_rows([[1, 1]])])
        assert c.dims == [1, 1]
        assert c.D(0) == LinearMap.from_rows([[1, 0]])
        assert cohomology(c).dims == [0, 0]

    def test_hodge_blocks(self, plane):
        c = output_complex(plane)
        for i in range(len(c)):
            ran, harmonic, coran = hodge_decompose(c, i)
            assert (ran.T @ harmonic).is_zero()
            assert (ran.T @ coran).is_zero()
            assert (harmonic.T @ coran).is_zero()
            assert ran.cols + harmonic.cols + coran.cols == c.space(i).dim

    def test_poincare_estimate(self):
        c = line([1, 1], [LinearMap.from_rows([[2]])])
        assert poincare_constant_estimate(c, 0) == pytest.approx(0.5)
        assert poincare_constant_estimate(line([1, 1], [None]), 0) == 0.0


class TestValidation:
    def test_family_index(self, plane, space3):
        assert plane.J == 0
        assert space3.J == 1

    def test_sign_perturbed_link(self):
        top, bottom, links = alt_family_rows(3, 1, 3)
        links[1] = -links[1]
        with pytest.raises(AnticommutativityViolation):
            validate_diagram(top, bottom, links)

    def test_no_valid_index(self):
        top = line([1, 1], [None], "top")
        bottom = line([1, 1], [None], "bottom")
        with pytest.raises(NoValidJ):
            validate_diagram(top, bottom, [LinearMap.zeros(1, 1)])

    def test_link_shape(self):
        top, bottom, links = alt_family_rows(2, 0, 2)
        links[0] = LinearMap.zeros(1, 1)
        with pytest.raises(ShapeMismatch):
            validate_diagram(top, bottom, links)

    def test_shapes_checked_before_complexes(self):
        broken = line([1, 1, 1], [LinearMap.identity(1), LinearMap.identity(1)])
        with pytest.raises(ShapeMismatch):
            validate_diagram(broken, line([1, 1], [None]), [])


class TestOutputComplex:
    @pytest.mark.parametrize("n,J,r", [(2, 0, 3), (2, 1, 3), (3, 0, 4), (3, 1, 4), (3, 2, 4)])
    def test_family_formula(self, n, J, r):
        diag = alt_family_diagram(n, J, r)
        out = output_complex(diag).validate()
        assert cohomology(out).dims == [comb(n + 1, J + 1)] + [0] * n
        report = theorem_dimension_check(diag)
        assert report["equality_all"] and report["snr_all"] and report["consistent"]

    def test_orders(self, space3):
        assert output_complex(space3).orders == [1, 2, 1]

    def test_snr(self, space3):
        assert all(snr_holds(space3, i) for i in range(space3.N + 1))


class TestTwisted:
    def test_twisted_is_a_complex(self, plane):
        for i in range(plane.N):
            assert (twisted_differential(plane, i + 1) @ twisted_differential(plane, i)).is_zero()

    def test_projection(self, plane):
        for i in range(plane.N + 1):
            pi = projector_pi(plane, i)
            assert pi @ pi == pi
            if i < plane.N:
                a = twisted_differential(plane, i)
                assert projector_pi(plane, i + 1) @ a == a @ pi

    def test_complement_exact(self, space3):
        assert all(entry["exact"] for entry in complement_exactness_check(space3))

    def test_phi(self, plane):
        out = output_complex(plane)
        for i in range(plane.N + 1):
            phi = phi_iso(plane, i)
            pi = projector_pi(plane, i)
            assert rank(phi @ pi) == out.space(i).dim
            assert phi @ phi_inverse(plane, i) == out.P(i)
            assert phi_inverse(plane, i) @ phi @ pi == pi
            if i < plane.N:
                a = twisted_differential(plane, i)
                assert phi_iso(plane, i + 1) @ a @ pi == out.D(i) @ phi @ pi

    def test_lemma8(self, space3):
        assert all(entry["holds"] for entry in lemma8_identity_check(space3))

    def test_cohomology_basis_is_closed(self, plane):
        for i, basis in enumerate(twisted_cohomology_basis(plane)):
            assert (twisted_differential(plane, i) @ basis).is_zero()
            assert rank(basis) == basis.cols

    @pytest.mark.parametrize("diag", [
        pytest.param("plane"), pytest.param("space3"),
        pytest.param(("elasticity3d", 4), marks=pytest.mark.slow),
    ])
    def test_cohomology_basis_is_a_direct_complement(self, request, diag):
        diag = named_diagram(*diag) if isinstance(diag, tuple) else request.getfixturevalue(diag)
        for i, basis in enumerate(twisted_cohomology_basis(diag)):
            incoming = twisted_differential(diag, i - 1)
            stacked = hstack([basis, column_space_basis(incoming)])
            assert rank(stacked) == basis.cols + rank(incoming)
            kernel = rank(diag.P_Y(i)) - rank(twisted_differential(diag, i))
            assert stacked.cols == kernel


class TestSNR:
    @pytest.fixture
    def loose(self):
        # S^0 sends the closed class of the bottom row onto a class the top row never hits
        return validate_diagram(line([1, 1], [None], "top"), line([1, 1], [None], "bottom"),
                                [LinearMap.identity(1)], name="loose")

    def test_diagram_is_valid(self, loose):
        assert loose.J == 0
        assert not snr_holds(loose, 0)
        assert snr_holds(loose, 1)

    def test_cohomology_basis_needs_snr(self, loose):
        with pytest.raises(SNRViolation) as err:
            twisted_cohomology_basis(loose)
        assert err.value.index == 0
        assert err.value.reason == "SNRViolation"

    def test_dimensions_drop_without_snr(self, loose):
        report = theorem_dimension_check(loose)
        assert [e["h_out"] for e in report["entries"]] == [1, 1]
        assert [e["h_top"] + e["h_bottom"] for e in report["entries"]] == [2, 2]
        assert report["inequality_all"]
        assert not report["equality_all"]
        assert not report["snr_all"]
        assert report["consistent"]


class TestNamedDimensions:
    @pytest.mark.parametrize("name", [
        "hessian2d", "elasticity2d", "gradrot2d",
        pytest.param("elasticity3d", marks=pytest.mark.slow),
    ])
    def test_theorem_dimension(self, name):
        report = theorem_dimension_check(named_diagram(name, 4))
        assert report["equality_all"] and report["snr_all"] and report["consistent"]
        assert [e["h_out"] for e in report["entries"]] == cohomology(named_complex(name, 4)).dims


class TestK:
    def test_family_K(self, space3):
        assert len(validate_K(space3, alt_family_K(3, 1, 4))) == 4

    def test_hodge_K(self, space3):
        validate_K(space3, hodge_homotopy_K(space3))

    def test_zero_K_rejected(self, plane):
        with pytest.raises(KConditionViolation):
            validate_K(plane, [])

    def test_cochain_map(self, plane):
        ops = validate_K(plane, alt_family_K(2, 0, 3))
        out = output_complex(plane)
        for i in range(plane.N):
            left = cochain_K(plane, ops, i + 1) @ sum_differential(plane, i)
            assert left == out.D(i) @ cochain_K(plane, ops, i)

    def test_induced_isomorphism(self, plane):
        ops = validate_K(plane, hodge_homotopy_K(plane))
        for i in range(plane.N + 1):
            assert induced_cohomology_rank(plane, ops, i)["iso"]

    def test_representatives(self, plane):
        ops = validate_K(plane, alt_family_K(2, 0, 3))
        reps = explicit_representatives(plane, ops, 0)
        assert reps.cols == rank(reps) == 3

    @pytest.mark.slow
    def test_representatives_span_named_cohomology(self):
        diag = named_diagram("elasticity3d", 4)
        ops = validate_K(diag, hodge_homotopy_K(diag))
        out = output_complex(diag)
        dims = cohomology(out).dims
        for i in range(diag.N + 1):
            reps = explicit_representatives(diag, ops, i)
            assert reps.cols == rank(reps) == dims[i]
            assert (out.D(i) @ reps).is_zero()
