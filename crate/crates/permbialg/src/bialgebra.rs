//! Perm coalgebras, bialgebra compatibility, coboundary structures and the
//! quasi-triangular / triangular / factorizable trichotomy.
//!
//! Coalgebras are stored as coefficients `d[k][i][j]` with
//! `Δ(e_k) = Σ d[k][i][j] e_i⊗e_j`. The induced multiplication on the dual
//! space is `e_i* · e_j* = Σ_k d[k][i][j] e_k*`.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::perm::{dual_labels, PermAlgebra};
use crate::scalar::Scalar;
use crate::tensor::{pybe_defect, rad_invariance_defect, ThreeTensor, TwoTensor};

/// A comultiplication `Δ` on a `dim`-dimensional space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermCoalgebra {
    dim: usize,
    labels: Vec<String>,
    /// Flattened `dim³` table, index `((k*dim)+i)*dim + j`.
    d: Vec<Scalar>,
}

impl PermCoalgebra {
    /// The trivial coproduct `Δ = 0`.
    pub fn zero(dim: usize) -> Self {
        PermCoalgebra {
            dim,
            labels: crate::perm::default_labels(dim),
            d: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Sparse constructor from `(k, i, j, c)` entries: the coefficient of
    /// `e_i⊗e_j` in `Δ(e_k)`.
    pub fn from_entries(
        dim: usize,
        labels: Option<Vec<String>>,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| crate::perm::default_labels(dim));
        if labels.len() != dim {
            return Err(Error::Invalid(format!(
                "expected {dim} labels, got {}",
                labels.len()
            )));
        }
        let mut c = PermCoalgebra {
            dim,
            labels,
            d: vec![Scalar::zero(); dim * dim * dim],
        };
        for (k, i, j, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Invalid(format!(
                    "coproduct index ({k},{i},{j}) out of range for dim {dim}"
                )));
            }
            *c.d_mut(*k, *i, *j) += v;
        }
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn d(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.d[(k * self.dim + i) * self.dim + j]
    }

    fn d_mut(&mut self, k: usize, i: usize, j: usize) -> &mut Scalar {
        &mut self.d[(k * self.dim + i) * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Scalar::is_zero)
    }

    /// `Δ(e_k)` as a 2-tensor.
    pub fn delta_of_basis(&self, k: usize) -> TwoTensor {
        let table = Matrix::from_fn(self.dim, self.dim, |i, j| self.d(k, i, j).clone());
        TwoTensor::from_table(table).expect("square by construction")
    }

    /// `Δ(x)` by linear extension.
    pub fn delta(&self, x: &Vector) -> Result<TwoTensor> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "coproduct on dim-{} coalgebra got length {}",
                self.dim,
                x.len()
            )));
        }
        let mut acc = TwoTensor::zero(self.dim);
        for k in 0..self.dim {
            if !x[k].is_zero() {
                acc = acc.add(&self.delta_of_basis(k).scale(&x[k]));
            }
        }
        Ok(acc)
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for k in 0..self.dim {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let v = self.d(k, i, j);
                    if !v.is_zero() {
                        out.push((k, i, j, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// The algebra on `A*` dual to this coproduct:
    /// `e_i*·e_j*` has coefficient `d[k][i][j]` at `e_k*`. It is perm
    /// exactly when this coalgebra is a perm coalgebra.
    pub fn dual_algebra(&self) -> PermAlgebra {
        let n = self.dim;
        let mut alg = PermAlgebra::zero(n).with_labels(dual_labels(&self.labels));
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let v = self.d(k, i, j);
                    if !v.is_zero() {
                        alg.set_c(i, j, k, v.clone());
                    }
                }
            }
        }
        alg
    }

    /// Inverse of [`PermCoalgebra::dual_algebra`]: read a coproduct off an
    /// algebra on the dual space.
    pub fn from_dual_algebra(alg: &PermAlgebra) -> Self {
        let n = alg.dim();
        let mut co = PermCoalgebra::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = alg.c(i, j, k);
                    if !v.is_zero() {
                        *co.d_mut(k, i, j) = v.clone();
                    }
                }
            }
        }
        co
    }

    /// Coassociativity and left-cocommutativity defects at each basis
    /// element: `(Δ⊗id)Δ − (id⊗Δ)Δ` and `(id⊗Δ)Δ − (σ⊗id)(Δ⊗id)Δ`.
    /// Empty exactly when this is a perm coalgebra.
    pub fn coalgebra_defects(&self) -> Vec<(usize, ThreeTensor, ThreeTensor)> {
        let n = self.dim;
        let mut out = Vec::new();
        for k in 0..n {
            let mut t1 = ThreeTensor::zero(n); // (Δ⊗id)Δ(e_k)
            let mut t2 = ThreeTensor::zero(n); // (id⊗Δ)Δ(e_k)
            for i in 0..n {
                for s in 0..n {
                    let outer = self.d(k, i, s);
                    if outer.is_zero() {
                        continue;
                    }
                    for p in 0..n {
                        for q in 0..n {
                            let inner = self.d(i, p, q);
                            if !inner.is_zero() {
                                *t1.get_mut(p, q, s) += outer * inner;
                            }
                        }
                    }
                }
            }
            for p in 0..n {
                for j in 0..n {
                    let outer = self.d(k, p, j);
                    if outer.is_zero() {
                        continue;
                    }
                    for q in 0..n {
                        for s in 0..n {
                            let inner = self.d(j, q, s);
                            if !inner.is_zero() {
                                *t2.get_mut(p, q, s) += outer * inner;
                            }
                        }
                    }
                }
            }
            let t3 = t1.swap12();
            let first = t1.sub(&t2);
            let second = t2.sub(&t3);
            if !first.is_zero() || !second.is_zero() {
                out.push((k, first, second));
            }
        }
        out
    }

    pub fn is_perm_coalgebra(&self) -> bool {
        self.coalgebra_defects().is_empty()
    }
}

/// A perm algebra and a comultiplication on the same space. Validity is
/// established by the defect operations, never at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermBialgebra {
    pub algebra: PermAlgebra,
    pub coproduct: PermCoalgebra,
}

impl PermBialgebra {
    pub fn new(algebra: PermAlgebra, coproduct: PermCoalgebra) -> Result<Self> {
        if algebra.dim() != coproduct.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra dim {} vs coproduct dim {}",
                algebra.dim(),
                coproduct.dim()
            )));
        }
        Ok(PermBialgebra { algebra, coproduct })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Defects of the three bialgebra compatibility laws at basis pairs:
///
/// ```text
/// Δ(a·b) = (ad(a)⊗id)Δ(b) + (id⊗R(b))Δ(a)
/// σ(R(b)⊗id)Δ(a) = (R(a)⊗id)Δ(b)
/// Δ(a·b) = (id⊗L(a))Δ(b) + (ad(b)⊗id)(Δ(a) − σΔ(a))
/// ```
#[derive(Clone, Debug)]
pub struct BialgebraReport {
    pub law_one: Vec<(usize, usize, TwoTensor)>,
    pub law_two: Vec<(usize, usize, TwoTensor)>,
    pub law_three: Vec<(usize, usize, TwoTensor)>,
}

impl BialgebraReport {
    pub fn is_clean(&self) -> bool {
        self.law_one.is_empty() && self.law_two.is_empty() && self.law_three.is_empty()
    }
}

pub fn bialgebra_defects(b: &PermBialgebra) -> BialgebraReport {
    let n = b.dim();
    let alg = &b.algebra;
    let co = &b.coproduct;
    let mut law_one = Vec::new();
    let mut law_two = Vec::new();
    let mut law_three = Vec::new();
    for i in 0..n {
        let delta_i = co.delta_of_basis(i);
        let ad_i = alg.ad_basis(i);
        let l_i = alg.left_mult_basis(i);
        let r_i = alg.right_mult_basis(i);
        for j in 0..n {
            let delta_j = co.delta_of_basis(j);
            let ad_j = alg.ad_basis(j);
            let r_j = alg.right_mult_basis(j);
            let delta_ij = co.delta(&alg.basis_product(i, j)).expect("dims");

            let id = Matrix::identity(n);
            let rhs1 = delta_j
                .apply_pair(&ad_i, &id)
                .add(&delta_i.apply_pair(&id, &r_j));
            let d1 = delta_ij.sub(&rhs1);
            if !d1.is_zero() {
                law_one.push((i, j, d1));
            }

            let lhs2 = delta_i.apply_pair(&r_j, &id).twist();
            let rhs2 = delta_j.apply_pair(&r_i, &id);
            let d2 = lhs2.sub(&rhs2);
            if !d2.is_zero() {
                law_two.push((i, j, d2));
            }

            let skew_i = delta_i.sub(&delta_i.twist());
            let rhs3 = delta_j
                .apply_pair(&id, &l_i)
                .add(&skew_i.apply_pair(&ad_j, &id));
            let d3 = delta_ij.sub(&rhs3);
            if !d3.is_zero() {
                law_three.push((i, j, d3));
            }
        }
    }
    BialgebraReport {
        law_one,
        law_two,
        law_three,
    }
}

/// The coboundary coproduct `Δ_r(a) = (id⊗R(a) − ad(a)⊗id)(r)` evaluated at
/// basis elements.
pub fn coboundary_coproduct(alg: &PermAlgebra, r: &TwoTensor) -> Result<PermCoalgebra> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "coboundary coproduct on dim-{} algebra got tensor of dim {}",
            n,
            r.dim()
        )));
    }
    let mut co = PermCoalgebra::zero(n);
    co.labels = alg.labels().to_vec();
    for k in 0..n {
        let table = crate::tensor::invariance_defect_at(alg, r, k);
        for i in 0..n {
            for j in 0..n {
                let v = table.get(i, j);
                if !v.is_zero() {
                    *co.d_mut(k, i, j) = v.clone();
                }
            }
        }
    }
    Ok(co)
}

/// The multiplication on `A*` dual to `Δ_r`, built directly from the closed
/// form `a*·_r b* = L*(T_r(a*))b* + ad*(T_{σ(r)}(b*))a*`. Must agree with
/// `coboundary_coproduct(..).dual_algebra()` exactly.
pub fn dual_mult_r(alg: &PermAlgebra, r: &TwoTensor) -> Result<PermAlgebra> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "dual multiplication on dim-{} algebra got tensor of dim {}",
            n,
            r.dim()
        )));
    }
    let t_r = r.t_map();
    let t_sigma = r.twist().t_map();
    // Per first factor: L*(T_r(e_i*)); per second factor: ad*(T_σ(e_j*)).
    let l_star: Vec<Matrix> = (0..n)
        .map(|i| Ok(alg.left_mult(&t_r.column(i))?.transpose()))
        .collect::<Result<_>>()?;
    let ad_star: Vec<Matrix> = (0..n)
        .map(|j| Ok(alg.ad(&t_sigma.column(j))?.transpose()))
        .collect::<Result<_>>()?;
    let mut dual = PermAlgebra::zero(n).with_labels(dual_labels(alg.labels()));
    for i in 0..n {
        for j in 0..n {
            let product = &l_star[i].apply(&Vector::basis(n, j))
                + &ad_star[j].apply(&Vector::basis(n, i));
            for k in 0..n {
                if !product[k].is_zero() {
                    dual.set_c(i, j, k, product[k].clone());
                }
            }
        }
    }
    Ok(dual)
}

/// How a 2-tensor sits in the coboundary theory of its algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    /// `r` fails the perm Yang-Baxter equation or its skew part is not
    /// `(R, ad)`-invariant; `Δ_r` need not define a perm bialgebra.
    NotCoboundarySolution,
    /// Yang-Baxter solution with invariant skew part.
    QuasiTriangular,
    /// Quasi-triangular with symmetric `r`.
    Triangular,
    /// Quasi-triangular with `T_{r−σ(r)}` a linear isomorphism.
    Factorizable,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::NotCoboundarySolution => "NotCoboundarySolution",
            Classification::QuasiTriangular => "QuasiTriangular",
            Classification::Triangular => "Triangular",
            Classification::Factorizable => "Factorizable",
        }
    }

    /// Whether the classification admits a quasi-triangular structure at
    /// all (triangular and factorizable are special cases).
    pub fn is_quasi_triangular(&self) -> bool {
        !matches!(self, Classification::NotCoboundarySolution)
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classify `r` on `alg`. Triangular is reported before factorizable; the
/// two overlap only in dimension zero, where a symmetric tensor also has an
/// (empty) invertible `T_{r−σ(r)}`.
pub fn classify(alg: &PermAlgebra, r: &TwoTensor) -> Result<Classification> {
    if !pybe_defect(alg, r)?.is_zero() {
        return Ok(Classification::NotCoboundarySolution);
    }
    let skew_double = r.sub(&r.twist());
    if !rad_invariance_defect(alg, &skew_double)?.is_empty() {
        return Ok(Classification::NotCoboundarySolution);
    }
    if r.is_symmetric() {
        return Ok(Classification::Triangular);
    }
    if skew_double.t_map().rank() == alg.dim() {
        return Ok(Classification::Factorizable);
    }
    Ok(Classification::QuasiTriangular)
}

/// `T_{r−σ(r)}` is invertible on top of a quasi-triangular structure. In
/// dimension zero this holds vacuously even though `classify` reports
/// `Triangular` there.
pub fn is_factorizable(alg: &PermAlgebra, r: &TwoTensor) -> Result<bool> {
    let class = classify(alg, r)?;
    Ok(class.is_quasi_triangular()
        && r.sub(&r.twist()).t_map().rank() == alg.dim())
}

/// The factorization `x = x₁ − x₂` induced by a factorizable tensor:
/// `x₁ = T_r(T_{r−σ(r)}⁻¹ x)`, `x₂ = T_{σ(r)}(T_{r−σ(r)}⁻¹ x)`.
pub fn factorize(alg: &PermAlgebra, r: &TwoTensor, x: &Vector) -> Result<(Vector, Vector)> {
    if x.len() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "factorize on dim-{} algebra got length {}",
            alg.dim(),
            x.len()
        )));
    }
    if !is_factorizable(alg, r)? {
        return Err(Error::NotFactorizable);
    }
    let skew_double = r.sub(&r.twist());
    let preimage = skew_double.t_map().invert()?.apply(x);
    let x1 = r.t_map().apply(&preimage);
    let x2 = r.twist().t_map().apply(&preimage);
    Ok((x1, x2))
}

/// Verification that `a* ↦ (T_r a*, T_{σ(r)} a*)` embeds `(A*, ·_r)` into
/// the direct sum algebra `A ⊕ A`.
#[derive(Clone, Debug)]
pub struct ImageSubalgebraReport {
    pub hom_defects: Vec<crate::perm::HomDefect>,
    /// Present when the classification is factorizable; the map is then
    /// required to be injective.
    pub injective: Option<bool>,
}

impl ImageSubalgebraReport {
    pub fn is_clean(&self) -> bool {
        self.hom_defects.is_empty() && self.injective.unwrap_or(true)
    }
}

pub fn image_subalgebra_report(
    alg: &PermAlgebra,
    r: &TwoTensor,
) -> Result<ImageSubalgebraReport> {
    let class = classify(alg, r)?;
    if !class.is_quasi_triangular() {
        return Err(Error::NotQuasiTriangular);
    }
    let n = alg.dim();
    let dual = dual_mult_r(alg, r)?;
    let sum = alg.direct_sum(alg);
    let map = Matrix::from_fn(2 * n, n, |row, col| {
        if row < n {
            r.t_map()[(row, col)].clone()
        } else {
            r.twist().t_map()[(row - n, col)].clone()
        }
    });
    let hom_defects = dual.is_homomorphism(&sum, &map)?;
    let injective = if class == Classification::Factorizable {
        Some(map.rank() == n)
    } else {
        None
    };
    Ok(ImageSubalgebraReport {
        hom_defects,
        injective,
    })
}
