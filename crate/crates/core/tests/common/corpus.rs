//! Seeded inputs shared by the closure, twist and path-independence suites.

use homnambu::constructions::TraceFunctional;
use homnambu::generators::*;
use homnambu::linalg::{frac, int, LinearMap, Vector};
use homnambu::{ConstructionError, Constructor, HomAlgebra, Identity};

pub struct Case {
    pub name: String,
    pub output: Result<HomAlgebra, ConstructionError>,
    pub conclusion: Vec<Identity>,
}

fn diag(values: &[i64]) -> LinearMap {
    LinearMap::diagonal(values.iter().map(|&v| int(v)).collect())
}

pub fn fermionic_untwisted() -> (HomAlgebra, LinearMap) {
    let form = BilinearForm::fermionic(2).unwrap();
    let alpha = fermionic_alpha(&[int(2), int(3)]).unwrap();
    (bilinear_lts(&form, &int(1)), alpha)
}

pub fn twisted_sl2() -> HomAlgebra {
    Constructor::default().twist(&sl2(), &sl2_scaling(&int(2)).unwrap()).unwrap()
}

pub fn quaternion_flip() -> LinearMap {
    diag(&[1, 1, -1, -1])
}

pub fn twisted_quaternion() -> HomAlgebra {
    Constructor::default().twist(&quaternion_cross_3lie(), &quaternion_flip()).unwrap()
}

pub fn heisenberg_scaling() -> LinearMap {
    diag(&[2, 1, 2])
}

pub fn twisted_heisenberg() -> HomAlgebra {
    Constructor::default().twist(&heisenberg(), &heisenberg_scaling()).unwrap()
}

/// `e₁ ↦ e₁ + 3e₂`, `e₂ ↦ 2e₂`, an automorphism of [`affine2`].
pub fn affine2_automorphism() -> LinearMap {
    LinearMap::from_rows(vec![vec![int(1), int(0)], vec![int(3), int(2)]]).unwrap()
}

pub fn sign_conjugation() -> LinearMap {
    diagonal_conjugation(&[int(1), int(-1)]).unwrap()
}

pub fn involution_jts_2() -> HomAlgebra {
    involution_jts(&matrix_algebra(2).unwrap(), &matrix_transpose(2)).unwrap()
}

pub fn fermionic_jts() -> HomAlgebra {
    bilinear_jts(&BilinearForm::fermionic(2).unwrap(), &frac(1, 2))
}

/// Binary Hom-associative algebras, twisted and not.
pub fn hom_associative_inputs() -> Vec<(String, HomAlgebra)> {
    let c = Constructor::default();
    let m2 = matrix_algebra(2).unwrap();
    vec![
        ("matrix_algebra(1)".into(), matrix_algebra(1).unwrap()),
        ("matrix_algebra(2)".into(), m2.clone()),
        ("matrix_algebra(2) twisted by diag-conj(1,2)".into(), c.twist(&m2, &diagonal_conjugation(&[int(1), int(2)]).unwrap()).unwrap()),
        ("dual_numbers".into(), dual_numbers()),
        ("dual_numbers twisted by ε ↦ 3ε".into(), c.twist(&dual_numbers(), &dual_numbers_scaling(&int(3))).unwrap()),
    ]
}

/// Ternary totally Hom-associative algebras.
pub fn ternary_associative_inputs() -> Vec<(String, HomAlgebra)> {
    let c = Constructor::default();
    let mut out: Vec<(String, HomAlgebra)> = hom_associative_inputs()
        .into_iter()
        .take(3)
        .map(|(n, a)| (format!("ternary({n})"), c.ternary_assoc_from_hom_assoc(&a).unwrap()))
        .collect();
    let (ring, alpha) = hom_pair_ternary_ring(1, 2, &diag(&[2]), &diag(&[1, -1])).unwrap();
    out.push(("hom_pair_ternary_ring(1,2)".into(), ring.clone()));
    out.push(("hom_pair_ternary_ring(1,2) twisted".into(), c.ternary_twist(&ring, &alpha).unwrap()));
    out
}

/// Inputs with a weak self-morphism, for the twist-Jacobian lemma.
pub fn weak_morphism_pairs() -> Vec<(String, HomAlgebra, LinearMap)> {
    let (ferm, alpha) = fermionic_untwisted();
    vec![
        ("fermionic (untwisted)".into(), ferm, alpha),
        ("quaternion_cross_3lie".into(), quaternion_cross_3lie(), quaternion_flip()),
        ("sl2".into(), sl2(), sl2_scaling(&int(3)).unwrap()),
        ("heisenberg".into(), heisenberg(), heisenberg_scaling()),
        ("matrix_jts(2,2)".into(), matrix_jts(2, 2).unwrap(), sign_conjugation()),
        ("involution_jts(M2, transpose)".into(), involution_jts_2(), sign_conjugation()),
        ("octonions".into(), octonions(), octonion_basic_triple_automorphism()),
        ("dual_numbers".into(), dual_numbers(), dual_numbers_scaling(&frac(-1, 2))),
        ("affine2".into(), affine2(), affine2_automorphism()),
        ("matrix_algebra(2)".into(), matrix_algebra(2).unwrap(), diagonal_conjugation(&[int(1), int(2)]).unwrap()),
    ]
}

fn case(name: impl Into<String>, output: Result<HomAlgebra, ConstructionError>, conclusion: &[Identity]) -> Case {
    Case { name: name.into(), output, conclusion: conclusion.to_vec() }
}

/// Every construction applied to valid inputs, each paired with the
/// identities its conclusion asserts.
pub fn closure_corpus() -> Vec<Case> {
    use Identity::*;
    let c = Constructor::default();
    let mut out = Vec::new();
    let lie_nambu = [HomNambu, Antisymmetry, Multiplicative];

    // twisting
    for (name, alg, beta) in weak_morphism_pairs() {
        let concl: &[Identity] = match name.as_str() {
            "matrix_jts(2,2)" | "involution_jts(M2, transpose)" => &[HomJordanTs],
            "dual_numbers" | "matrix_algebra(2)" => &[HomAssociative, Multiplicative],
            "octonions" => &[Multiplicative],
            "fermionic (untwisted)" => &[HomNambu, HomLieTs, Multiplicative],
            _ => &lie_nambu,
        };
        out.push(case(format!("twist({name})"), c.twist(&alg, &beta), concl));
    }
    out.push(case("twist(quaternion, −Id)", c.twist(&quaternion_cross_3lie(), &diag(&[-1, -1, -1, -1])), &lie_nambu));
    let (ferm, alpha) = fermionic_untwisted();
    out.push(case("derived(fermionic V_α, 1)", c.twist(&ferm, &alpha).and_then(|v| c.derived(&v, 1)), &[HomNambu, HomLieTs]));
    out.push(case("derived(fermionic V_α, 2)", c.twist(&ferm, &alpha).and_then(|v| c.derived(&v, 2)), &[HomNambu, HomLieTs]));
    out.push(case("derived(twisted sl2, 1)", c.derived(&twisted_sl2(), 1), &[HomNambu, Antisymmetry, HomLie]));

    // ternary twists keep the triple-system type
    let jordan_octonions = c.plus_algebra(&octonions()).and_then(|p| c.jts_from_jordan(&p));
    out.push(case("ternary_twist(matrix_jts(2,2))", c.ternary_twist(&matrix_jts(2, 2).unwrap(), &sign_conjugation()), &[HomJordanTs]));
    out.push(case("ternary_twist(involution_jts)", c.ternary_twist(&involution_jts_2(), &sign_conjugation()), &[HomJordanTs]));
    out.push(case(
        "ternary_twist(J(octonions⁺), automorphism)",
        jordan_octonions.clone().and_then(|j| c.ternary_twist(&j, &octonion_basic_triple_automorphism())),
        &[HomJordanTs],
    ));
    out.push(case("ternary_twist(fermionic JTS, α)", c.ternary_twist(&fermionic_jts(), &alpha), &[HomJordanTs]));
    out.push(case(
        "ternary_twist(L(sl2), scaling)",
        c.lts_from_hom_lie(&sl2()).and_then(|t| c.ternary_twist(&t, &sl2_scaling(&int(2)).unwrap())),
        &[HomLieTs],
    ));
    for (name, a) in ternary_associative_inputs() {
        out.push(case(format!("ternary_twist-input {name}"), Ok(a.clone()), &[TernaryTotalHomAssoc]));
        out.push(case(format!("jts_from_ternary_assoc({name})"), c.jts_from_ternary_assoc(&a), &[HomJordanTs]));
        out.push(case(format!("lts_from_ternary_assoc({name})"), c.lts_from_ternary_assoc(&a), &[HomLieTs]));
    }
    out.push(case("jts_from_ternary_assoc(dual numbers)", c.ternary_assoc_from_hom_assoc(&dual_numbers()).and_then(|a| c.jts_from_ternary_assoc(&a)), &[HomJordanTs]));
    for (name, j) in [
        ("matrix_jts(2,2)", matrix_jts(2, 2).unwrap()),
        ("matrix_jts(1,2)", matrix_jts(1, 2).unwrap()),
        ("fermionic JTS", fermionic_jts()),
        ("involution_jts", involution_jts_2()),
    ] {
        out.push(case(format!("lts_from_jts({name})"), c.lts_from_jts(&j), &[HomLieTs]));
    }

    // binary inputs
    for (name, a) in hom_associative_inputs().into_iter().skip(1) {
        out.push(case(format!("ternary_assoc_from_hom_assoc({name})"), c.ternary_assoc_from_hom_assoc(&a), &[TernaryTotalHomAssoc]));
        out.push(case(format!("lts_from_hom_assoc({name})"), c.lts_from_hom_assoc(&a), &[HomLieTs]));
        out.push(case(format!("minus_algebra({name})"), c.minus_algebra(&a), &[HomLie]));
    }
    for (name, l) in [
        ("sl2", sl2()),
        ("twisted sl2", twisted_sl2()),
        ("heisenberg", heisenberg()),
        ("twisted heisenberg", twisted_heisenberg()),
        ("affine2", affine2()),
    ] {
        out.push(case(format!("lts_from_hom_lie({name})"), c.lts_from_hom_lie(&l), &[HomLieTs]));
    }
    out.push(case(
        "lts_from_hom_lie(matrix_algebra(2)⁻)",
        c.minus_algebra(&matrix_algebra(2).unwrap()).and_then(|l| c.lts_from_hom_lie(&l)),
        &[HomLieTs],
    ));
    out.push(case("plus_algebra(matrix_algebra(2))", c.plus_algebra(&matrix_algebra(2).unwrap()), &[JordanAlgebra]));
    out.push(case("plus_algebra(octonions)", c.plus_algebra(&octonions()), &[JordanAlgebra]));
    out.push(case("minus_algebra(octonions)", c.minus_algebra(&octonions()), &[Maltsev]));
    out.push(case(
        "jts_from_jordan(matrix_algebra(2)⁺)",
        c.plus_algebra(&matrix_algebra(2).unwrap()).and_then(|p| c.jts_from_jordan(&p)),
        &[HomJordanTs],
    ));
    out.push(case("jts_from_jordan(octonions⁺)", jordan_octonions, &[HomJordanTs]));
    out.push(case("jts_from_jordan(dual_numbers)", c.jts_from_jordan(&dual_numbers()), &[HomJordanTs]));
    out.push(case(
        "lts_from_maltsev(octonions⁻)",
        c.minus_algebra(&octonions()).and_then(|m| c.lts_from_maltsev(&m)),
        &[HomLieTs],
    ));
    out.push(case("lts_from_maltsev(sl2)", c.lts_from_maltsev(&sl2()), &[HomLieTs]));

    // arity raising
    out.push(case("raise_arity(sl2)", c.raise_arity(&sl2()), &[HomNambu, Multiplicative]));
    out.push(case("iterate_raise(sl2, 2)", c.iterate_raise(&sl2(), 2), &[HomNambu, Multiplicative]));
    out.push(case("raise_arity(twisted sl2)", c.raise_arity(&twisted_sl2()), &[HomNambu, Multiplicative]));
    out.push(case("raise_arity(quaternion)", c.raise_arity(&quaternion_cross_3lie()), &[HomNambu, Multiplicative]));
    out.push(case("raise_arity(fermionic V_α)", c.twist(&ferm, &alpha).and_then(|v| c.raise_arity(&v)), &[HomNambu, Multiplicative]));

    let so5 = bilinear_lts(&BilinearForm::new(LinearMap::identity(5)).unwrap(), &int(1));
    out.push(case("raise_arity(so(5) triple system)", c.raise_arity(&so5), &[HomNambu, Multiplicative]));

    // arity lowering
    let q = quaternion_cross_3lie();
    for i in 0..4 {
        out.push(case(format!("lower_arity(quaternion, e{})", i + 1), c.lower_arity(&q, &Vector::basis(4, i)), &[HomLie]));
    }
    out.push(case("lower_arity(quaternion, e1+2e3)", c.lower_arity(&q, &Vector::from_ints(&[1, 0, 2, 0])), &[HomLie]));
    for i in 0..2 {
        out.push(case(
            format!("lower_arity(twisted quaternion, e{})", i + 1),
            c.lower_arity(&twisted_quaternion(), &Vector::basis(4, i)),
            &[HomLie],
        ));
    }
    out.push(case("lower_arity_k(quaternion, [e4])", c.lower_arity_k(&q, &[Vector::basis(4, 3)]), &[HomLie]));

    // trace constructions
    let trace_inputs: Vec<(&str, HomAlgebra, TraceFunctional, LinearMap, Vector)> = vec![
        ("affine2", affine2(), affine2_trace(), LinearMap::scalar(2, int(2)), Vector::basis(2, 0)),
        ("heisenberg", heisenberg(), TraceFunctional::from_ints(&[1, 0, 0]), LinearMap::scalar(3, int(2)), Vector::basis(3, 0)),
        ("twisted heisenberg", twisted_heisenberg(), TraceFunctional::from_ints(&[1, 0, 0]), heisenberg_scaling(), Vector::basis(3, 1)),
    ];
    for (name, l, tau, beta, a) in trace_inputs {
        out.push(case(format!("ternary_from_trace({name})"), c.ternary_from_trace(&l, &tau, &beta), &[HomNambu, Antisymmetry]));
        out.push(case(format!("reduce_trace_bracket({name})"), c.reduce_trace_bracket(&l, &tau, &beta, &a), &[HomLie]));
    }
    out
}

