//! The double perm algebra of a perm bialgebra.
//!
//! For a perm bialgebra `((A, ·_A), (A*, ·_{A*}))` the double carries the
//! multiplication
//!
//! ```text
//! (a+a*)·(b+b*) = (a·b + L*_{A*}(a*)b + ad*_{A*}(b*)a)
//!               + (a*·b* + L*_A(a)b* + ad*_A(b)a*)
//! ```
//!
//! on `A ⊕ A*`. The basis of the double is ordered primal block first, then
//! dual block: `(e_1, .., e_n, e_1*, .., e_n*)`; every 2n-dimensional tensor
//! and form in this crate uses that ordering.

use crate::bialgebra::{bialgebra_defects, PermBialgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::{dual_labels, HomDefect, PermAlgebra};
use crate::rotabaxter::BilinearForm;
use crate::scalar::Scalar;
use crate::tensor::TwoTensor;

/// A perm bialgebra together with its double.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    pub base: PermBialgebra,
    pub total: PermAlgebra,
}

/// Build the double of a perm bialgebra. Inputs whose perm, coalgebra or
/// compatibility defects are nonzero are refused: the double is only
/// guaranteed to be perm for genuine bialgebras.
pub fn build_double(b: &PermBialgebra) -> Result<DoubleAlgebra> {
    if !b.algebra.perm_axiom_defects().is_empty() {
        return Err(Error::NotABialgebra("algebra fails the perm axioms".into()));
    }
    if !b.coproduct.coalgebra_defects().is_empty() {
        return Err(Error::NotABialgebra(
            "coproduct fails the perm coalgebra axioms".into(),
        ));
    }
    if !bialgebra_defects(b).is_clean() {
        return Err(Error::NotABialgebra(
            "compatibility laws have nonzero defects".into(),
        ));
    }
    let n = b.dim();
    let alg = &b.algebra;
    let dual = b.coproduct.dual_algebra();
    let mut labels = alg.labels().to_vec();
    labels.extend(dual_labels(alg.labels()));
    let mut total = PermAlgebra::zero(2 * n).with_labels(labels);

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = alg.c(i, j, k);
                if !v.is_zero() {
                    total.set_c(i, j, k, v.clone());
                }
                let w = dual.c(i, j, k);
                if !w.is_zero() {
                    total.set_c(n + i, n + j, n + k, w.clone());
                }
            }
        }
    }
    // Cross terms; dual maps act through transposed matrices.
    let l_primal: Vec<Matrix> = (0..n).map(|i| alg.left_mult_basis(i)).collect();
    let ad_primal: Vec<Matrix> = (0..n).map(|i| alg.ad_basis(i)).collect();
    let l_dual: Vec<Matrix> = (0..n).map(|j| dual.left_mult_basis(j)).collect();
    let ad_dual: Vec<Matrix> = (0..n).map(|j| dual.ad_basis(j)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // e_i · e_j* = ad*_{A*}(e_j*)e_i + L*_A(e_i)e_j*
                let v = &ad_dual[j][(i, k)];
                if !v.is_zero() {
                    total.set_c(i, n + j, k, v.clone());
                }
                let v = &l_primal[i][(j, k)];
                if !v.is_zero() {
                    total.set_c(i, n + j, n + k, v.clone());
                }
                // e_j* · e_i = L*_{A*}(e_j*)e_i + ad*_A(e_i)e_j*
                let v = &l_dual[j][(i, k)];
                if !v.is_zero() {
                    total.set_c(n + j, i, k, v.clone());
                }
                let v = &ad_primal[i][(j, k)];
                if !v.is_zero() {
                    total.set_c(n + j, i, n + k, v.clone());
                }
            }
        }
    }
    Ok(DoubleAlgebra {
        base: b.clone(),
        total,
    })
}

/// The canonical tensor `r = Σ_i e_i ⊗ e_i*` on a double of base dimension
/// `n`, in the (primal, dual) basis ordering.
pub fn canonical_r(n: usize) -> TwoTensor {
    let entries: Vec<(usize, usize, Scalar)> =
        (0..n).map(|i| (i, n + i, Scalar::one())).collect();
    TwoTensor::from_entries(2 * n, &entries).expect("indices in range")
}

/// Report for the isomorphism `φ: A ⊕ A* → A ⊕ A` of a factorizable
/// structure: `φ(a) = (a, a)`, `φ(a*) = (T_r a*, T_{σ(r)} a*)`.
#[derive(Clone, Debug)]
pub struct DoubleIsoReport {
    pub phi: Matrix,
    pub invertible: bool,
    pub hom_defects: Vec<HomDefect>,
}

impl DoubleIsoReport {
    pub fn is_clean(&self) -> bool {
        self.invertible && self.hom_defects.is_empty()
    }
}

/// Build the double of `(A, Δ_r)` for a factorizable `r` and verify that
/// `φ` is an invertible homomorphism onto the direct sum algebra `A ⊕ A`.
pub fn double_iso(alg: &PermAlgebra, r: &TwoTensor) -> Result<DoubleIsoReport> {
    if !crate::bialgebra::is_factorizable(alg, r)? {
        return Err(Error::NotFactorizable);
    }
    let n = alg.dim();
    let coproduct = crate::bialgebra::coboundary_coproduct(alg, r)?;
    let double = build_double(&PermBialgebra::new(alg.clone(), coproduct)?)?;
    let identity = Matrix::identity(n);
    let phi = Matrix::block2x2(&identity, &r.t_map(), &identity, &r.twist().t_map());
    let invertible = phi.rank() == 2 * n;
    let hom_defects = double
        .total
        .is_homomorphism(&alg.direct_sum(alg), &phi)?;
    Ok(DoubleIsoReport {
        phi,
        invertible,
        hom_defects,
    })
}

/// The standard skew form on `A ⊕ A*`:
/// `𝔅_d(a+a*, b+b*) = ⟨a, b*⟩ − ⟨a*, b⟩`, i.e. the block matrix
/// `[[0, I], [−I, 0]]` in the (primal, dual) ordered basis.
pub fn standard_form_bd(n: usize) -> BilinearForm {
    let identity = Matrix::identity(n);
    let zero = Matrix::zeros(n, n);
    BilinearForm::new(Matrix::block2x2(&zero, &identity, &(-&identity), &zero))
        .expect("square by construction")
}
