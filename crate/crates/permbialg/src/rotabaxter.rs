//! Rota-Baxter operators, quadratic perm algebras, and the correspondence
//! with triangular (weight 0) and factorizable (weight ≠ 0) structures.
//!
//! The dictionary between the quadratic Rota-Baxter side `(A, ·, 𝔅, P)` of
//! weight λ and the tensor side `r` is
//!
//! ```text
//! T_r = P ∘ (𝔅♯)⁻¹        r − σ(r) = −λ φ_𝔅        𝔅♯ = −λ T_{r−σ(r)}⁻¹
//! ```
//!
//! with `𝔅♯(a) = 𝔅(a, ·)` in the first slot and `φ_𝔅` the 2-tensor whose
//! associated map is `(𝔅♯)⁻¹`.

use crate::double::standard_form_bd;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::perm::PermAlgebra;
use crate::representation::Representation;
use crate::scalar::Scalar;
use crate::tensor::{rad_invariance_defect, TwoTensor};

/// A bilinear form `𝔅(e_i, e_j) = B[i][j]` on the underlying space of an
/// algebra. Skewness, nondegeneracy and invariance are established by
/// defect operations, not at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "bilinear form matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut matrix = Matrix::zeros(dim, dim);
        for (i, j, v) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::Invalid(format!(
                    "form index ({i},{j}) out of range for dim {dim}"
                )));
            }
            matrix[(*i, *j)] += v;
        }
        Ok(BilinearForm { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn evaluate(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.matrix.apply(y))
    }

    pub fn is_skew(&self) -> bool {
        (&self.matrix + &self.matrix.transpose()).is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    pub fn negate(&self) -> BilinearForm {
        BilinearForm {
            matrix: -&self.matrix,
        }
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let v = &self.matrix[(i, j)];
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }
}

/// Matrix of `𝔅♯: A → A*`, `⟨𝔅♯(e_i), e_j⟩ = B[i][j]`, in primal/dual
/// coordinates (so the matrix is `Bᵀ`). Errors on degenerate forms.
pub fn sharp(form: &BilinearForm) -> Result<Matrix> {
    if !form.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    Ok(form.matrix.transpose())
}

/// The 2-tensor `φ_𝔅` with `T_{φ_𝔅} = (𝔅♯)⁻¹`.
pub fn phi_of_form(form: &BilinearForm) -> Result<TwoTensor> {
    let s = sharp(form)?;
    TwoTensor::from_t_map(&s.invert()?)
}

/// Defect report for `(A, ·, 𝔅)` as a quadratic perm algebra: skew-symmetry
/// at pairs, a rank statement, and the invariance
/// `𝔅(a·b, c) = 𝔅(a, b·c − c·b)` at all basis triples.
#[derive(Clone, Debug)]
pub struct QuadraticReport {
    pub skew_defects: Vec<(usize, usize, Scalar)>,
    pub rank: usize,
    pub dim: usize,
    pub invariance_defects: Vec<(usize, usize, usize, Scalar)>,
}

impl QuadraticReport {
    pub fn is_clean(&self) -> bool {
        self.skew_defects.is_empty()
            && self.rank == self.dim
            && self.invariance_defects.is_empty()
    }
}

pub fn quadratic_defects(alg: &PermAlgebra, form: &BilinearForm) -> QuadraticReport {
    let n = alg.dim();
    assert_eq!(form.dim(), n, "form/algebra dimension mismatch");
    let mut skew_defects = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let d = &form.matrix[(i, j)] + &form.matrix[(j, i)];
            if !d.is_zero() {
                skew_defects.push((i, j, d));
            }
        }
    }
    let mut invariance_defects = Vec::new();
    for i in 0..n {
        let ei = Vector::basis(n, i);
        for j in 0..n {
            let ij = alg.basis_product(i, j);
            for k in 0..n {
                let ek = Vector::basis(n, k);
                let jk = alg.basis_product(j, k);
                let kj = alg.basis_product(k, j);
                let lhs = form.evaluate(&ij, &ek);
                let rhs = form.evaluate(&ei, &(&jk - &kj));
                let d = lhs - rhs;
                if !d.is_zero() {
                    invariance_defects.push((i, j, k, d));
                }
            }
        }
    }
    QuadraticReport {
        skew_defects,
        rank: form.matrix.rank(),
        dim: n,
        invariance_defects,
    }
}

/// A Rota-Baxter defect `P(a)·P(b) − P(P(a)·b + a·P(b) + λ a·b)` at one
/// basis pair.
#[derive(Clone, Debug)]
pub struct RbDefect {
    pub i: usize,
    pub j: usize,
    pub defect: Vector,
}

pub fn rb_defect(alg: &PermAlgebra, p: &Matrix, weight: &Scalar) -> Result<Vec<RbDefect>> {
    let n = alg.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "operator must be {n}x{n}, got {}x{}",
            p.rows(),
            p.cols()
        )));
    }
    let mut out = Vec::new();
    for i in 0..n {
        let pa = p.column(i);
        for j in 0..n {
            let pb = p.column(j);
            let lhs = alg.multiply(&pa, &pb)?;
            let inner = &(&alg.multiply(&pa, &Vector::basis(n, j))?
                + &alg.multiply(&Vector::basis(n, i), &pb)?)
                + &alg.basis_product(i, j).scale(weight);
            let defect = &lhs - &p.apply(&inner);
            if !defect.is_zero() {
                out.push(RbDefect { i, j, defect });
            }
        }
    }
    Ok(out)
}

/// Exhaustive search for Rota-Baxter operators of weight λ with integer
/// entries in `[-bound, bound]`, in lexicographic entry order.
pub fn search_rb_operators(alg: &PermAlgebra, weight: &Scalar, bound: i64) -> Vec<Matrix> {
    let n = alg.dim();
    let cells = n * n;
    let span = 2 * bound + 1;
    let mut found = Vec::new();
    let total = (span as u64).pow(cells as u32);
    for code in 0..total {
        let mut digits = code;
        let mut entries = Vec::with_capacity(cells);
        for _ in 0..cells {
            entries.push((digits % span as u64) as i64 - bound);
            digits /= span as u64;
        }
        // entries[0] varies fastest; reverse for lexicographic order.
        entries.reverse();
        let p = Matrix::from_fn(n, n, |i, j| Scalar::from(entries[i * n + j]));
        if rb_defect(alg, &p, weight).expect("square operator").is_empty() {
            found.push(p);
        }
    }
    found
}

/// First searched operator that is neither `0` nor `−λ·id`.
pub fn first_nontrivial_rb_operator(
    alg: &PermAlgebra,
    weight: &Scalar,
    bound: i64,
) -> Option<Matrix> {
    let n = alg.dim();
    let trivial = Matrix::identity(n).scale(&-weight.clone());
    search_rb_operators(alg, weight, bound)
        .into_iter()
        .find(|p| !p.is_zero() && *p != trivial)
}

/// A quadratic perm algebra with a weight-λ Rota-Baxter operator subject to
/// the compatibility `𝔅(Pa, b) + 𝔅(a, Pb) + λ𝔅(a, b) = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticRbData {
    pub algebra: PermAlgebra,
    pub form: BilinearForm,
    pub operator: Matrix,
    pub weight: Scalar,
}

impl QuadraticRbData {
    pub fn new(
        algebra: PermAlgebra,
        form: BilinearForm,
        operator: Matrix,
        weight: Scalar,
    ) -> Result<Self> {
        let n = algebra.dim();
        if form.dim() != n || operator.rows() != n || operator.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "quadratic Rota-Baxter data on dim {n} got form dim {} and operator {}x{}",
                form.dim(),
                operator.rows(),
                operator.cols()
            )));
        }
        Ok(QuadraticRbData {
            algebra,
            form,
            operator,
            weight,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

#[derive(Clone, Debug)]
pub struct QuadraticRbReport {
    pub quadratic: QuadraticReport,
    pub rb: Vec<RbDefect>,
    pub compatibility: Vec<(usize, usize, Scalar)>,
}

impl QuadraticRbReport {
    pub fn is_clean(&self) -> bool {
        self.quadratic.is_clean() && self.rb.is_empty() && self.compatibility.is_empty()
    }
}

pub fn quadratic_rb_defects(data: &QuadraticRbData) -> QuadraticRbReport {
    let n = data.dim();
    let quadratic = quadratic_defects(&data.algebra, &data.form);
    let rb = rb_defect(&data.algebra, &data.operator, &data.weight).expect("shapes checked");
    let mut compatibility = Vec::new();
    for i in 0..n {
        let ei = Vector::basis(n, i);
        let pei = data.operator.column(i);
        for j in 0..n {
            let ej = Vector::basis(n, j);
            let pej = data.operator.column(j);
            let d = data.form.evaluate(&pei, &ej)
                + data.form.evaluate(&ei, &pej)
                + &data.weight * &data.form.evaluate(&ei, &ej);
            if !d.is_zero() {
                compatibility.push((i, j, d));
            }
        }
    }
    QuadraticRbReport {
        quadratic,
        rb,
        compatibility,
    }
}

/// The companion datum `(A, −𝔅, −(λ·id + P), λ)`; clean exactly when the
/// input is clean.
pub fn companion(data: &QuadraticRbData) -> QuadraticRbData {
    let n = data.dim();
    let lambda_id = Matrix::identity(n).scale(&data.weight);
    QuadraticRbData {
        algebra: data.algebra.clone(),
        form: data.form.negate(),
        operator: -&(&lambda_id + &data.operator),
        weight: data.weight.clone(),
    }
}

/// From a weight-λ Rota-Baxter operator `P` on `A`, the quadratic
/// Rota-Baxter structure `(A ⋉_{L*,ad*} A*, 𝔅_d, P − (λ·id + P)*)` of the
/// same weight on the semidirect product.
pub fn semidirect_quadratic_rb(
    alg: &PermAlgebra,
    p: &Matrix,
    weight: &Scalar,
) -> Result<QuadraticRbData> {
    if !rb_defect(alg, p, weight)?.is_empty() {
        return Err(Error::NotRotaBaxter);
    }
    let n = alg.dim();
    let total = Representation::coadjoint(alg).semidirect_product();
    let form = standard_form_bd(n);
    let dual_block = -&(&Matrix::identity(n).scale(weight) + &p.transpose());
    let operator = Matrix::block2x2(p, &Matrix::zeros(n, n), &Matrix::zeros(n, n), &dual_block);
    QuadraticRbData::new(total, form, operator, weight.clone())
}

/// The 2-tensor of a clean quadratic Rota-Baxter structure:
/// `t_map(r) = P ∘ (𝔅♯)⁻¹`. Weight 0 yields a symmetric tensor (triangular
/// structure); nonzero weight yields a factorizable one.
pub fn qrb_to_r(data: &QuadraticRbData) -> Result<TwoTensor> {
    let report = quadratic_rb_defects(data);
    if !report.is_clean() {
        return Err(Error::NotQuadraticRb(describe_unclean(&report)));
    }
    let s = sharp(&data.form)?;
    TwoTensor::from_t_map(&(&data.operator * &s.invert()?))
}

fn describe_unclean(report: &QuadraticRbReport) -> String {
    let mut parts = Vec::new();
    if !report.quadratic.skew_defects.is_empty() {
        parts.push("form is not skew".to_string());
    }
    if report.quadratic.rank != report.quadratic.dim {
        parts.push(format!(
            "form rank {} < dim {}",
            report.quadratic.rank, report.quadratic.dim
        ));
    }
    if !report.quadratic.invariance_defects.is_empty() {
        parts.push("form is not invariant".to_string());
    }
    if !report.rb.is_empty() {
        parts.push("operator fails the Rota-Baxter identity".to_string());
    }
    if !report.compatibility.is_empty() {
        parts.push("operator/form compatibility fails".to_string());
    }
    parts.join("; ")
}

/// From a factorizable tensor and a chosen weight λ ≠ 0, the quadratic
/// Rota-Baxter structure with `𝔅(a, b) = −λ⟨T_{r−σ(r)}⁻¹(a), b⟩` and
/// `P = T_r ∘ 𝔅♯`. Different weights give different `(𝔅, P)` for the same
/// `r`; [`qrb_to_r`] inverts this for every choice.
pub fn r_to_qrb(alg: &PermAlgebra, r: &TwoTensor, weight: &Scalar) -> Result<QuadraticRbData> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if !crate::bialgebra::is_factorizable(alg, r)? {
        return Err(Error::NotFactorizable);
    }
    // B[i][j] = −λ⟨K⁻¹ e_i, e_j⟩ with K = t_map(r−σ(r)) gives
    // B = −λ(K⁻¹)ᵀ = −λ(t − tᵀ)⁻¹ on coefficient tables.
    let k = r.sub(&r.twist()).t_map();
    let b = k.transpose().invert()?.scale(&-weight.clone());
    let form = BilinearForm::new(b)?;
    let operator = &r.t_map() * &sharp(&form)?;
    QuadraticRbData::new(alg.clone(), form, operator, weight.clone())
}

/// From a weight-λ Rota-Baxter operator `P` on `A` with λ ≠ 0, the
/// factorizable tensor `r = Σ_i ((P+λ·id)(e_i) ⊗ e_i* + e_i* ⊗ P(e_i))` on
/// the semidirect product `A ⋉_{L*,ad*} A*`.
pub fn rb_to_double_r(alg: &PermAlgebra, p: &Matrix, weight: &Scalar) -> Result<TwoTensor> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if !rb_defect(alg, p, weight)?.is_empty() {
        return Err(Error::NotRotaBaxter);
    }
    let n = alg.dim();
    let shifted = p + &Matrix::identity(n).scale(weight);
    let mut entries = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let v = &shifted[(k, i)];
            if !v.is_zero() {
                // (P+λ id)(e_i) ⊗ e_i*
                entries.push((k, n + i, v.clone()));
            }
            let w = &p[(k, i)];
            if !w.is_zero() {
                // e_i* ⊗ P(e_i)
                entries.push((n + i, k, w.clone()));
            }
        }
    }
    TwoTensor::from_entries(2 * n, &entries)
}

/// Defects of the Rota-Baxter-type identity satisfied by `P = T_r ∘ 𝔅♯` on
/// a quadratic perm algebra:
/// `P(a)·P(b) = P(P(a)·b + a·P(b) − a·T_{r−σ(r)}𝔅♯(b))` at basis pairs.
/// Zero exactly when `r` solves the perm Yang-Baxter equation, provided the
/// skew part of `r` is `(R, ad)`-invariant.
pub fn prbw_defect(
    alg: &PermAlgebra,
    form: &BilinearForm,
    r: &TwoTensor,
) -> Result<Vec<(usize, usize, Vector)>> {
    if !quadratic_defects(alg, form).is_clean() {
        return Err(Error::NotQuadratic);
    }
    let n = alg.dim();
    let s = sharp(form)?;
    let p = &r.t_map() * &s;
    let correction = &r.sub(&r.twist()).t_map() * &s;
    let mut out = Vec::new();
    for i in 0..n {
        let pa = p.column(i);
        let ei = Vector::basis(n, i);
        for j in 0..n {
            let pb = p.column(j);
            let ej = Vector::basis(n, j);
            let lhs = alg.multiply(&pa, &pb)?;
            let inner = &(&alg.multiply(&pa, &ej)? + &alg.multiply(&ei, &pb)?)
                - &alg.multiply(&ei, &correction.column(j))?;
            let defect = &lhs - &p.apply(&inner);
            if !defect.is_zero() {
                out.push((i, j, defect));
            }
        }
    }
    Ok(out)
}

/// The quadratic/tensor bridge: `(A, ·, 𝔅)` is a quadratic perm algebra
/// exactly when `φ_𝔅` is skew and `(R, ad)`-invariant. Both sides of the
/// equivalence as booleans, for nondegenerate forms.
pub fn phi_bridge_sides(alg: &PermAlgebra, form: &BilinearForm) -> Result<(bool, bool)> {
    let clean = quadratic_defects(alg, form).is_clean();
    let phi = phi_of_form(form)?;
    let invariant = phi.is_skew() && rad_invariance_defect(alg, &phi)?.is_empty();
    Ok((clean, invariant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{classify, Classification};
    use crate::catalog;

    #[test]
    fn rb_defect_trivial_operators() {
        let alg = catalog::lperm2();
        for w in [Scalar::zero(), Scalar::one(), Scalar::from(-2)] {
            assert!(rb_defect(&alg, &Matrix::zeros(2, 2), &w).unwrap().is_empty());
            let neg = Matrix::identity(2).scale(&-w.clone());
            assert!(rb_defect(&alg, &neg, &w).unwrap().is_empty());
        }
    }

    #[test]
    fn search_matches_closed_form_on_lperm2() {
        // On lperm2 the Rota-Baxter identity reduces to P² + λP = 0, which
        // serves as an independent enumeration oracle for the search.
        let alg = catalog::lperm2();
        for w in [Scalar::zero(), Scalar::one(), Scalar::from(-1)] {
            let found = search_rb_operators(&alg, &w, 1);
            let mut expected = Vec::new();
            for code in 0..81u32 {
                let mut digits = code;
                let mut entries = Vec::new();
                for _ in 0..4 {
                    entries.push((digits % 3) as i64 - 1);
                    digits /= 3;
                }
                entries.reverse();
                let p = Matrix::from_fn(2, 2, |i, j| Scalar::from(entries[i * 2 + j]));
                let square_plus = &(&p * &p) + &p.scale(&w);
                if square_plus.is_zero() {
                    expected.push(p);
                }
            }
            assert_eq!(found, expected, "weight {w}");
            assert!(found.len() > 2, "search should find nontrivial operators");
        }
    }

    #[test]
    fn first_nontrivial_operator_exists() {
        let alg = catalog::lperm2();
        for w in [Scalar::zero(), Scalar::one(), Scalar::from(-1)] {
            let p = first_nontrivial_rb_operator(&alg, &w, 2).unwrap();
            assert!(!p.is_zero());
            assert!(rb_defect(&alg, &p, &w).unwrap().is_empty());
        }
    }

    #[test]
    fn sharp_pairing_convention() {
        let b = standard_form_bd(1);
        let s = sharp(&b).unwrap();
        // ⟨sharp(e_i), e_j⟩ = B[i][j] for all pairs.
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(
                    s.column(i)[j],
                    b.matrix()[(i, j)],
                    "pairing at ({i},{j})"
                );
            }
        }
        assert!(matches!(
            sharp(&BilinearForm::new(Matrix::zeros(2, 2)).unwrap()),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn sharp_round_trip() {
        let b = BilinearForm::new(Matrix::from_int_rows(&[&[0, 2], &[-2, 0]])).unwrap();
        let s = sharp(&b).unwrap();
        // Recover the form from the map: B[i][j] = ⟨sharp(e_i), e_j⟩.
        let recovered = Matrix::from_fn(2, 2, |i, j| s.column(i)[j].clone());
        assert_eq!(&recovered, b.matrix());
    }

    #[test]
    fn phi_of_standard_form() {
        // Matrix-inversion oracle: t_map(φ) = sharp⁻¹.
        let b = standard_form_bd(1);
        let phi = phi_of_form(&b).unwrap();
        assert!(phi.is_skew());
        let s = sharp(&b).unwrap();
        assert_eq!(phi.t_map(), s.invert().unwrap());
        // Round trip back to the form.
        let s_again = phi.t_map().invert().unwrap();
        let recovered = Matrix::from_fn(2, 2, |i, j| s_again.column(i)[j].clone());
        assert_eq!(&recovered, b.matrix());
    }

    #[test]
    fn phi_skew_iff_form_skew() {
        let skew = BilinearForm::new(Matrix::from_int_rows(&[&[0, 3], &[-3, 0]])).unwrap();
        assert!(phi_of_form(&skew).unwrap().is_skew());
        let not_skew = BilinearForm::new(Matrix::from_int_rows(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(!phi_of_form(&not_skew).unwrap().is_skew());
    }

    #[test]
    fn quadratic_defects_on_known_instances() {
        // Zero algebra with the standard skew form: invariance is trivial.
        let z2 = PermAlgebra::zero(2);
        assert!(quadratic_defects(&z2, &standard_form_bd(1)).is_clean());
        // lperm2 with the standard skew form: all eight invariance triples
        // hold (triple-loop oracle).
        assert!(quadratic_defects(&catalog::lperm2(), &standard_form_bd(1)).is_clean());
        // nilp2 fails invariance at (e1,e1,e1): 𝔅(e1·e1, e1) = 𝔅(e2,e1) = −1
        // while the right side vanishes.
        let report = quadratic_defects(&catalog::nilp2(), &standard_form_bd(1));
        assert!(!report.is_clean());
        assert!(report
            .invariance_defects
            .iter()
            .any(|(i, j, k, d)| (*i, *j, *k) == (0, 0, 0) && *d == Scalar::from(-1)));
    }

    #[test]
    fn quadratic_rb_compatibility_violation() {
        // P = id, λ = 0, skew 𝔅: the compatibility defect is 2𝔅(a,b).
        let data = QuadraticRbData::new(
            PermAlgebra::zero(2),
            standard_form_bd(1),
            Matrix::identity(2),
            Scalar::zero(),
        )
        .unwrap();
        let report = quadratic_rb_defects(&data);
        assert!(report.quadratic.is_clean());
        assert!(report.rb.is_empty());
        assert_eq!(report.compatibility.len(), 2);
        assert!(report
            .compatibility
            .iter()
            .any(|(i, j, d)| (*i, *j) == (0, 1) && *d == Scalar::from(2)));
    }

    #[test]
    fn clean_weight_zero_instance_on_zero_algebra() {
        // P = diag(1, −1) pairs with the standard symplectic form.
        let data = QuadraticRbData::new(
            PermAlgebra::zero(2),
            standard_form_bd(1),
            Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            Scalar::zero(),
        )
        .unwrap();
        assert!(quadratic_rb_defects(&data).is_clean());
        let r = qrb_to_r(&data).unwrap();
        assert!(r.is_symmetric());
        assert_eq!(
            r.table().clone(),
            Matrix::from_int_rows(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            classify(&data.algebra, &r).unwrap(),
            Classification::Triangular
        );
    }

    #[test]
    fn companion_is_an_involution_and_preserves_cleanliness() {
        let data = QuadraticRbData::new(
            PermAlgebra::zero(2),
            standard_form_bd(1),
            Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            Scalar::zero(),
        )
        .unwrap();
        assert_eq!(companion(&companion(&data)), data);
        assert!(quadratic_rb_defects(&companion(&data)).is_clean());
        // P = 0 gives companion operator −λ·id.
        let zero_p = QuadraticRbData::new(
            PermAlgebra::zero(2),
            standard_form_bd(1),
            Matrix::zeros(2, 2),
            Scalar::from(3),
        )
        .unwrap();
        assert_eq!(
            companion(&zero_p).operator,
            Matrix::identity(2).scale(&Scalar::from(-3))
        );
    }

    #[test]
    fn semidirect_quadratic_rb_trivial_cases() {
        let alg = catalog::lperm2();
        // P = 0, λ = 0: zero operator on the double space.
        let d = semidirect_quadratic_rb(&alg, &Matrix::zeros(2, 2), &Scalar::zero()).unwrap();
        assert!(d.operator.is_zero());
        assert!(quadratic_rb_defects(&d).is_clean());
        // P = −λ·id: block-diag(−λ·id, 0).
        let w = Scalar::from(2);
        let p = Matrix::identity(2).scale(&Scalar::from(-2));
        let d = semidirect_quadratic_rb(&alg, &p, &w).unwrap();
        assert!(quadratic_rb_defects(&d).is_clean());
        assert_eq!(
            d.operator,
            Matrix::block2x2(
                &p,
                &Matrix::zeros(2, 2),
                &Matrix::zeros(2, 2),
                &Matrix::zeros(2, 2)
            )
        );
        // Non-Rota-Baxter input is refused.
        assert!(matches!(
            semidirect_quadratic_rb(&alg, &Matrix::identity(2), &Scalar::zero()),
            Err(Error::NotRotaBaxter)
        ));
    }

    #[test]
    fn semidirect_instance_from_searched_operator() {
        let alg = catalog::lperm2();
        let w = Scalar::one();
        let p = first_nontrivial_rb_operator(&alg, &w, 2).unwrap();
        let d = semidirect_quadratic_rb(&alg, &p, &w).unwrap();
        assert!(quadratic_rb_defects(&d).is_clean());
    }

    #[test]
    fn qrb_to_r_rejects_unclean_data() {
        let data = QuadraticRbData::new(
            PermAlgebra::zero(2),
            standard_form_bd(1),
            Matrix::identity(2),
            Scalar::zero(),
        )
        .unwrap();
        assert!(matches!(qrb_to_r(&data), Err(Error::NotQuadraticRb(_))));
    }

    #[test]
    fn correspondence_round_trip_on_canonical_double() {
        // Canonical factorizable tensor on the double of (nilp2, Δ = 0).
        let total = Representation::coadjoint(&catalog::nilp2()).semidirect_product();
        let r = crate::double::canonical_r(2);
        for w in [Scalar::one(), Scalar::ratio(-3, 2)] {
            let data = r_to_qrb(&total, &r, &w).unwrap();
            assert!(quadratic_rb_defects(&data).is_clean());
            assert_eq!(qrb_to_r(&data).unwrap(), r);
        }
        assert!(matches!(
            r_to_qrb(&total, &r, &Scalar::zero()),
            Err(Error::ZeroWeight)
        ));
    }

    #[test]
    fn r_to_qrb_rejects_non_factorizable() {
        assert!(matches!(
            r_to_qrb(&catalog::lperm2(), &TwoTensor::zero(2), &Scalar::one()),
            Err(Error::NotFactorizable)
        ));
    }

    #[test]
    fn rb_to_double_r_block_structure() {
        let alg = catalog::lperm2();
        // P = 0, λ = 1 gives the canonical tensor.
        let r = rb_to_double_r(&alg, &Matrix::zeros(2, 2), &Scalar::one()).unwrap();
        assert_eq!(r, crate::double::canonical_r(2));
        // P = −λ·id gives r = Σ e_i* ⊗ (−λ e_i).
        let w = Scalar::from(2);
        let p = Matrix::identity(2).scale(&Scalar::from(-2));
        let r = rb_to_double_r(&alg, &p, &w).unwrap();
        assert_eq!(
            r.entries(),
            vec![(2, 0, Scalar::from(-2)), (3, 1, Scalar::from(-2))]
        );
        assert!(matches!(
            rb_to_double_r(&alg, &Matrix::zeros(2, 2), &Scalar::zero()),
            Err(Error::ZeroWeight)
        ));
    }

    #[test]
    fn rb_to_double_r_is_factorizable() {
        let alg = catalog::lperm2();
        let w = Scalar::one();
        let p = first_nontrivial_rb_operator(&alg, &w, 2).unwrap();
        let r = rb_to_double_r(&alg, &p, &w).unwrap();
        let total = Representation::coadjoint(&alg).semidirect_product();
        assert_eq!(classify(&total, &r).unwrap(), Classification::Factorizable);
    }

    #[test]
    fn prbw_defect_trivial_and_tracking_cases() {
        // r = 0: both sides vanish.
        let z2 = PermAlgebra::zero(2);
        let form = standard_form_bd(1);
        assert!(prbw_defect(&z2, &form, &TwoTensor::zero(2))
            .unwrap()
            .is_empty());
        // Zero algebra, any r: every term is a product.
        let any = TwoTensor::basis(2, 0, 0);
        assert!(prbw_defect(&z2, &form, &any).unwrap().is_empty());
        // Non-quadratic form is refused.
        assert!(matches!(
            prbw_defect(&catalog::nilp2(), &form, &any),
            Err(Error::NotQuadratic)
        ));
    }

    #[test]
    fn prbw_defect_matches_yang_baxter_on_lperm2() {
        // pybe_defect as the independent oracle, over the quadratic form J.
        let alg = catalog::lperm2();
        let form = standard_form_bd(1);
        // A factorizable instance: e2⊗e1 solves the Yang-Baxter equation
        // (its table has a zero first row) and has invertible skew part.
        let good = TwoTensor::basis(2, 1, 0);
        assert!(crate::tensor::pybe_defect(&alg, &good).unwrap().is_zero());
        assert!(prbw_defect(&alg, &form, &good).unwrap().is_empty());
        // A perturbed non-solution with invariant skew part.
        let bad = TwoTensor::from_entries(
            2,
            &[
                (0, 1, Scalar::one()),
                (1, 0, Scalar::from(-1)),
                (0, 0, Scalar::one()),
                (1, 1, Scalar::one()),
            ],
        )
        .unwrap();
        assert!(rad_invariance_defect(&alg, &bad.sub(&bad.twist()))
            .unwrap()
            .is_empty());
        assert!(!crate::tensor::pybe_defect(&alg, &bad).unwrap().is_zero());
        assert!(!prbw_defect(&alg, &form, &bad).unwrap().is_empty());
    }

    #[test]
    fn weight_lemma_relating_compatibility_and_skew_part() {
        // For P = T_r ∘ 𝔅♯: compatibility of weight λ holds exactly when
        // r − σ(r) = −λ φ_𝔅.
        let alg = PermAlgebra::zero(2);
        let form = standard_form_bd(1);
        let phi = phi_of_form(&form).unwrap();
        for w in [Scalar::one(), Scalar::from(-2), Scalar::ratio(1, 3)] {
            // Choose r with exactly the right skew part plus a symmetric part.
            let r = phi
                .scale(&(-w.clone() * Scalar::ratio(1, 2)))
                .add(&TwoTensor::from_entries(2, &[(0, 0, Scalar::from(5))]).unwrap());
            assert_eq!(r.sub(&r.twist()), phi.scale(&-w.clone()));
            let p = &r.t_map() * &sharp(&form).unwrap();
            let data =
                QuadraticRbData::new(alg.clone(), form.clone(), p, w.clone()).unwrap();
            assert!(quadratic_rb_defects(&data).compatibility.is_empty());

            // Break the relation: compatibility must fail.
            let r_bad = r.add(&TwoTensor::from_entries(2, &[(0, 1, Scalar::one())]).unwrap());
            let p_bad = &r_bad.t_map() * &sharp(&form).unwrap();
            let data_bad = QuadraticRbData::new(alg.clone(), form.clone(), p_bad, w).unwrap();
            assert!(!quadratic_rb_defects(&data_bad).compatibility.is_empty());
        }
    }

    #[test]
    fn phi_bridge_on_fixed_forms() {
        // Clean side on lperm2 (skew forms are invariant there), failing
        // side on nilp2.
        let j = standard_form_bd(1);
        let (clean, invariant) = phi_bridge_sides(&catalog::lperm2(), &j).unwrap();
        assert!(clean && invariant);
        let (clean, invariant) = phi_bridge_sides(&catalog::nilp2(), &j).unwrap();
        assert!(!clean && !invariant);
        let non_skew = BilinearForm::new(Matrix::identity(2)).unwrap();
        let (clean, invariant) = phi_bridge_sides(&PermAlgebra::zero(2), &non_skew).unwrap();
        assert!(!clean && !invariant);
    }
}
