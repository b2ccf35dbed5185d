//! Perm algebras presented by structure constants.
//!
//! A perm algebra is an associative algebra whose product is additionally
//! left-commutative: `a·(b·c) = (a·b)·c = (b·a)·c`. Algebras are stored as
//! exact rational structure constants `c[i][j][k]` with
//! `e_i · e_j = Σ_k c[i][j][k] e_k`.
//!
//! Nothing here validates the perm axioms at construction time: defective
//! inputs are first-class citizens so that [`PermAlgebra::perm_axiom_defects`]
//! can report exactly where they break.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

/// A finite-dimensional algebra over ℚ given by structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// Flattened `dim³` table, index `((i*dim)+j)*dim + k`.
    c: Vec<Scalar>,
}

/// Axiom defects at one basis triple. `assoc` is
/// `e_i·(e_j·e_k) − (e_i·e_j)·e_k`, `left_comm` is
/// `(e_i·e_j)·e_k − (e_j·e_i)·e_k`; at least one of the two is nonzero
/// for every reported triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub assoc: Vector,
    pub left_comm: Vector,
}

/// A homomorphism defect `F(e_i·e_j) − F(e_i)·F(e_j)` at one basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDefect {
    pub i: usize,
    pub j: usize,
    pub defect: Vector,
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

pub fn dual_labels(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| format!("{l}*")).collect()
}

impl PermAlgebra {
    /// The algebra with identically zero multiplication.
    pub fn zero(dim: usize) -> Self {
        PermAlgebra {
            dim,
            labels: default_labels(dim),
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Build from sparse entries `(i, j, k, c)` meaning the coefficient of
    /// `e_k` in `e_i·e_j`. Repeated indices accumulate.
    pub fn from_entries(
        dim: usize,
        labels: Option<Vec<String>>,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let labels = match labels {
            Some(ls) => {
                if ls.len() != dim {
                    return Err(Error::Invalid(format!(
                        "expected {dim} labels, got {}",
                        ls.len()
                    )));
                }
                for (a, l) in ls.iter().enumerate() {
                    if ls[..a].contains(l) {
                        return Err(Error::Invalid(format!("duplicate label {l:?}")));
                    }
                }
                ls
            }
            None => default_labels(dim),
        };
        let mut alg = PermAlgebra {
            dim,
            labels,
            c: vec![Scalar::zero(); dim * dim * dim],
        };
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Invalid(format!(
                    "structure constant index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            *alg.c_mut(*i, *j, *k) += v;
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// Coefficient of `e_k` in `e_i·e_j`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    fn c_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_c(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        *self.c_mut(i, j, k) = v;
    }

    /// Sparse view of the structure constants, lexicographic in (i, j, k).
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let v = self.c(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        Vector::from_entries((0..self.dim).map(|k| self.c(i, j, k).clone()).collect())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "multiply on dim-{} algebra got lengths {} and {}",
                self.dim,
                x.len(),
                y.len()
            )));
        }
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of left multiplication `L(x): b ↦ x·b`.
    pub fn left_mult(&self, x: &Vector) -> Result<Matrix> {
        self.operator(x, |alg, i, j, k| alg.c(i, j, k).clone())
    }

    /// Matrix of right multiplication `R(x): b ↦ b·x`.
    pub fn right_mult(&self, x: &Vector) -> Result<Matrix> {
        self.operator(x, |alg, i, j, k| alg.c(j, i, k).clone())
    }

    /// Matrix of `ad(x) = L(x) − R(x)`.
    pub fn ad(&self, x: &Vector) -> Result<Matrix> {
        Ok(&self.left_mult(x)? - &self.right_mult(x)?)
    }

    fn operator(
        &self,
        x: &Vector,
        entry: impl Fn(&Self, usize, usize, usize) -> Scalar,
    ) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "operator on dim-{} algebra got length {}",
                self.dim,
                x.len()
            )));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = entry(self, i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += &x[i] * &c;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        self.left_mult(&Vector::basis(self.dim, i)).expect("basis")
    }

    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        self.right_mult(&Vector::basis(self.dim, i)).expect("basis")
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&Vector::basis(self.dim, i)).expect("basis")
    }

    /// Associativity and left-commutativity defects over all basis triples.
    /// Multilinearity makes the basis check complete; the list is empty
    /// exactly when the algebra is perm.
    pub fn perm_axiom_defects(&self) -> Vec<AxiomDefect> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = Vector::basis(n, i);
                    let jk = self.basis_product(j, k);
                    let ij = self.basis_product(i, j);
                    let ji = self.basis_product(j, i);
                    let ek = Vector::basis(n, k);
                    let left = self.multiply(&ei, &jk).expect("dims");
                    let ij_k = self.multiply(&ij, &ek).expect("dims");
                    let ji_k = self.multiply(&ji, &ek).expect("dims");
                    let assoc = &left - &ij_k;
                    let left_comm = &ij_k - &ji_k;
                    if !assoc.is_zero() || !left_comm.is_zero() {
                        out.push(AxiomDefect {
                            i,
                            j,
                            k,
                            assoc,
                            left_comm,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_perm(&self) -> bool {
        self.perm_axiom_defects().is_empty()
    }

    /// Defects of `F` as an algebra map from `self` to `target`, where the
    /// columns of `F` are the images of the basis of `self`.
    pub fn is_homomorphism(&self, target: &PermAlgebra, f: &Matrix) -> Result<Vec<HomDefect>> {
        if f.rows() != target.dim || f.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                target.dim,
                self.dim
            )));
        }
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let image_of_product = f.apply(&self.basis_product(i, j));
                let product_of_images = target.multiply(&f.column(i), &f.column(j))?;
                let defect = &image_of_product - &product_of_images;
                if !defect.is_zero() {
                    out.push(HomDefect { i, j, defect });
                }
            }
        }
        Ok(out)
    }

    /// Componentwise product on `A ⊕ B` with zero cross terms.
    pub fn direct_sum(&self, other: &PermAlgebra) -> PermAlgebra {
        let n = self.dim;
        let m = other.dim;
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut candidate = l.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        let mut alg = PermAlgebra {
            dim: n + m,
            labels,
            c: vec![Scalar::zero(); (n + m).pow(3)],
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.c(i, j, k).clone();
                    if !v.is_zero() {
                        alg.set_c(i, j, k, v);
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let v = other.c(i, j, k).clone();
                    if !v.is_zero() {
                        alg.set_c(n + i, n + j, n + k, v);
                    }
                }
            }
        }
        alg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn lperm2() -> PermAlgebra {
        catalog::lperm2()
    }

    fn nilp2() -> PermAlgebra {
        catalog::nilp2()
    }

    #[test]
    fn multiply_zero_algebra() {
        let a = PermAlgebra::zero(2);
        let x = Vector::from_entries(vec![Scalar::from(3), Scalar::ratio(1, 2)]);
        assert!(a.multiply(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn multiply_reads_structure_constants() {
        // Triple-loop oracle: e1·e2 on lperm2 expands to Σ_k c[0][1][k] e_k.
        let a = lperm2();
        let expected = Vector::from_entries(
            (0..2).map(|k| a.c(0, 1, k).clone()).collect(),
        );
        let got = a
            .multiply(&Vector::basis(2, 0), &Vector::basis(2, 1))
            .unwrap();
        assert_eq!(got, expected);
        assert_eq!(got, Vector::basis(2, 1));

        let n = nilp2();
        assert_eq!(
            n.multiply(&Vector::basis(2, 0), &Vector::basis(2, 0)).unwrap(),
            Vector::basis(2, 1)
        );
    }

    #[test]
    fn multiply_dimension_mismatch() {
        let a = lperm2();
        let bad = Vector::zero(3);
        assert!(matches!(
            a.multiply(&bad, &bad),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn axiom_defects_on_perm_algebras() {
        assert!(PermAlgebra::zero(3).perm_axiom_defects().is_empty());
        assert!(lperm2().perm_axiom_defects().is_empty());
        assert!(nilp2().perm_axiom_defects().is_empty());
    }

    #[test]
    fn axiom_defects_report_broken_triples() {
        // Only e1·e2 = e1: left-commutativity fails at (e1,e2,e2).
        let broken = catalog::broken2();
        let defects = broken.perm_axiom_defects();
        assert!(!defects.is_empty());
        let at = defects
            .iter()
            .find(|d| (d.i, d.j, d.k) == (0, 1, 1))
            .expect("defect at (0,1,1)");
        // Oracle: (e1·e2)·e2 = e1 while (e2·e1)·e2 = 0.
        assert_eq!(at.left_comm, Vector::basis(2, 0));
        assert_eq!(at.assoc, -&Vector::basis(2, 0));
    }

    #[test]
    fn multiplication_operators_on_lperm2() {
        // Column-by-column oracle: L(e1) = id, R(e1) = diag(1,0), ad(e1) = diag(0,1).
        let a = lperm2();
        assert_eq!(a.left_mult_basis(0), Matrix::identity(2));
        assert_eq!(a.right_mult_basis(0), Matrix::from_int_rows(&[&[1, 0], &[0, 0]]));
        assert_eq!(a.ad_basis(0), Matrix::from_int_rows(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn operators_vanish_on_zero_input() {
        let a = lperm2();
        let zero = Vector::zero(2);
        assert!(a.left_mult(&zero).unwrap().is_zero());
        assert!(a.right_mult(&zero).unwrap().is_zero());
        assert!(a.ad(&zero).unwrap().is_zero());
        let z = PermAlgebra::zero(3);
        let x = Vector::basis(3, 1);
        assert!(z.left_mult(&x).unwrap().is_zero());
        assert!(z.right_mult(&x).unwrap().is_zero());
    }

    #[test]
    fn operator_axioms_match_defect_check() {
        // For perm algebras: L(e_i·e_j) = L(e_i)L(e_j) = L(e_j)L(e_i).
        for alg in [lperm2(), nilp2(), lperm2().direct_sum(&lperm2())] {
            assert!(alg.is_perm());
            let n = alg.dim();
            for i in 0..n {
                for j in 0..n {
                    let lij = alg.left_mult(&alg.basis_product(i, j)).unwrap();
                    let li_lj = &alg.left_mult_basis(i) * &alg.left_mult_basis(j);
                    let lj_li = &alg.left_mult_basis(j) * &alg.left_mult_basis(i);
                    assert_eq!(lij, li_lj);
                    assert_eq!(li_lj, lj_li);
                }
            }
        }
        // And the broken instance violates the operator identities too.
        let broken = catalog::broken2();
        let ok = (0..2).all(|i| {
            (0..2).all(|j| {
                alg_op_identity(&broken, i, j)
            })
        });
        assert!(!ok);
    }

    fn alg_op_identity(alg: &PermAlgebra, i: usize, j: usize) -> bool {
        let lij = alg.left_mult(&alg.basis_product(i, j)).unwrap();
        let li_lj = &alg.left_mult_basis(i) * &alg.left_mult_basis(j);
        let lj_li = &alg.left_mult_basis(j) * &alg.left_mult_basis(i);
        lij == li_lj && li_lj == lj_li
    }

    #[test]
    fn homomorphism_identity_and_zero() {
        let a = lperm2();
        assert!(a
            .is_homomorphism(&a, &Matrix::identity(2))
            .unwrap()
            .is_empty());
        assert!(a
            .is_homomorphism(&a, &Matrix::zeros(2, 2))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn homomorphism_swap_fails() {
        let a = lperm2();
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let defects = a.is_homomorphism(&a, &swap).unwrap();
        // Oracle at (e1,e1): F(e1·e1) = e2 but F(e1)·F(e1) = e2·e2 = 0.
        assert!(defects.iter().any(|d| (d.i, d.j) == (0, 0)));
    }

    #[test]
    fn direct_sum_is_perm_and_block_structured() {
        let a = lperm2();
        let s = a.direct_sum(&a);
        assert_eq!(s.dim(), 4);
        assert!(s.perm_axiom_defects().is_empty());
        // Cross terms vanish.
        assert!(s.basis_product(0, 2).is_zero());
        assert!(s.basis_product(3, 1).is_zero());
        // Blocks reproduce the factors.
        assert_eq!(s.basis_product(0, 1), {
            let mut v = Vector::zero(4);
            v[1] = Scalar::one();
            v
        });
        assert_eq!(s.basis_product(2, 3), {
            let mut v = Vector::zero(4);
            v[3] = Scalar::one();
            v
        });
        // Labels stay distinct.
        assert_eq!(s.labels().len(), 4);
        let mut ls = s.labels().to_vec();
        ls.dedup();
        assert_eq!(ls.len(), 4);
    }

    #[test]
    fn direct_sum_with_dim_zero_is_identity() {
        let a = lperm2();
        let s = a.direct_sum(&PermAlgebra::zero(0));
        assert_eq!(s, a);
        let z = PermAlgebra::zero(1).direct_sum(&PermAlgebra::zero(1));
        assert_eq!(z.dim(), 2);
        assert!(z.is_perm());
        assert!(z.entries().is_empty());
    }
}
