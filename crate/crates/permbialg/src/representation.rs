//! Representations of perm algebras, A-perm algebras, semidirect products,
//! and relative Rota-Baxter operators of weight λ.
//!
//! A representation `(V, l, r)` of `(A, ·)` satisfies
//!
//! ```text
//! l(a·b) = l(a)l(b) = l(b)l(a)
//! r(a·b) = r(b)r(a) = r(b)l(a) = l(a)r(b)
//! ```
//!
//! Action matrices are stored per basis element of `A`; extension to
//! arbitrary elements is by linearity at call time.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::perm::{dual_labels, PermAlgebra};
use crate::scalar::Scalar;
use crate::tensor::{rad_invariance_defect, TwoTensor};

/// Action maps `l, r: A → End(V)` over a base perm algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    base: PermAlgebra,
    vdim: usize,
    space_labels: Vec<String>,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl Representation {
    pub fn new(base: PermAlgebra, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let n = base.dim();
        if l.len() != n || r.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need one l and one r matrix per base basis element ({n}), got {} and {}",
                l.len(),
                r.len()
            )));
        }
        let vdim = l.first().map_or(0, Matrix::rows);
        for m in l.iter().chain(r.iter()) {
            if m.rows() != vdim || m.cols() != vdim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrices must all be {vdim}x{vdim}"
                )));
            }
        }
        let space_labels = (1..=vdim).map(|i| format!("v{i}")).collect();
        Ok(Representation {
            base,
            vdim,
            space_labels,
            l,
            r,
        })
    }

    /// The regular representation `(A, L, R)`.
    pub fn regular(alg: &PermAlgebra) -> Self {
        let n = alg.dim();
        let l = (0..n).map(|i| alg.left_mult_basis(i)).collect();
        let r = (0..n).map(|i| alg.right_mult_basis(i)).collect();
        Representation {
            base: alg.clone(),
            vdim: n,
            space_labels: alg.labels().to_vec(),
            l,
            r,
        }
    }

    /// The coadjoint representation `(A*, L*, ad*)`, i.e. the dual of the
    /// regular representation.
    pub fn coadjoint(alg: &PermAlgebra) -> Self {
        Self::regular(alg)
            .dual()
            .expect("the regular representation is a representation")
    }

    pub fn base(&self) -> &PermAlgebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn space_labels(&self) -> &[String] {
        &self.space_labels
    }

    pub fn with_space_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vdim);
        self.space_labels = labels;
        self
    }

    pub fn l_basis(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn r_basis(&self, i: usize) -> &Matrix {
        &self.r[i]
    }

    /// `l(x)` by linear extension.
    pub fn l_of(&self, x: &Vector) -> Matrix {
        linear_combination(&self.l, x, self.vdim)
    }

    /// `r(x)` by linear extension.
    pub fn r_of(&self, x: &Vector) -> Matrix {
        linear_combination(&self.r, x, self.vdim)
    }

    /// Defects of the two representation equation chains at all basis
    /// pairs; empty exactly when `(V, l, r)` is a representation.
    pub fn defects(&self) -> Vec<RepresentationDefect> {
        let n = self.base.dim();
        let mut out = Vec::new();
        let mut push = |family: &'static str, i: usize, j: usize, defect: Matrix| {
            if !defect.is_zero() {
                out.push(RepresentationDefect {
                    family,
                    i,
                    j,
                    defect,
                });
            }
        };
        for i in 0..n {
            for j in 0..n {
                let prod = self.base.basis_product(i, j);
                let l_ab = self.l_of(&prod);
                let r_ab = self.r_of(&prod);
                let la_lb = &self.l[i] * &self.l[j];
                let lb_la = &self.l[j] * &self.l[i];
                let rb_ra = &self.r[j] * &self.r[i];
                let rb_la = &self.r[j] * &self.l[i];
                let la_rb = &self.l[i] * &self.r[j];
                push("l(ab)-l(a)l(b)", i, j, &l_ab - &la_lb);
                push("l(a)l(b)-l(b)l(a)", i, j, &la_lb - &lb_la);
                push("r(ab)-r(b)r(a)", i, j, &r_ab - &rb_ra);
                push("r(b)r(a)-r(b)l(a)", i, j, &rb_ra - &rb_la);
                push("r(b)l(a)-l(a)r(b)", i, j, &rb_la - &la_rb);
            }
        }
        out
    }

    pub fn is_representation(&self) -> bool {
        self.defects().is_empty()
    }

    /// The dual representation `(V*, l*, l* − r*)`.
    pub fn dual(&self) -> Result<Representation> {
        if !self.is_representation() {
            return Err(Error::NotARepresentation);
        }
        let l: Vec<Matrix> = self.l.iter().map(Matrix::transpose).collect();
        let r: Vec<Matrix> = self
            .l
            .iter()
            .zip(self.r.iter())
            .map(|(l, r)| &l.transpose() - &r.transpose())
            .collect();
        Ok(Representation {
            base: self.base.clone(),
            vdim: self.vdim,
            space_labels: dual_labels(&self.space_labels),
            l,
            r,
        })
    }

    /// The product `(a+u)·(b+v) = a·b + l(a)v + r(b)u` on `A ⊕ V`. The
    /// result passes the perm axioms exactly when this is a representation.
    pub fn semidirect_product(&self) -> PermAlgebra {
        let n = self.base.dim();
        let m = self.vdim;
        let mut labels = self.base.labels().to_vec();
        for l in &self.space_labels {
            let mut candidate = l.clone();
            while labels.contains(&candidate) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
        let mut alg = PermAlgebra::zero(n + m).with_labels(labels);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.base.c(i, j, k);
                    if !v.is_zero() {
                        alg.set_c(i, j, k, v.clone());
                    }
                }
            }
        }
        // e_i · f_j = l(e_i) f_j and f_i · e_j = r(e_j) f_i.
        for i in 0..n {
            for j in 0..m {
                for k in 0..m {
                    let lv = &self.l[i][(k, j)];
                    if !lv.is_zero() {
                        alg.set_c(i, n + j, n + k, lv.clone());
                    }
                    let rv = &self.r[i][(k, j)];
                    if !rv.is_zero() {
                        alg.set_c(n + j, i, n + k, rv.clone());
                    }
                }
            }
        }
        alg
    }
}

fn linear_combination(mats: &[Matrix], x: &Vector, vdim: usize) -> Matrix {
    assert_eq!(mats.len(), x.len(), "coefficient count mismatch");
    let mut acc = Matrix::zeros(vdim, vdim);
    for (m, c) in mats.iter().zip(x.iter()) {
        if !c.is_zero() {
            acc = &acc + &m.scale(c);
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct RepresentationDefect {
    pub family: &'static str,
    pub i: usize,
    pub j: usize,
    pub defect: Matrix,
}

/// A representation space carrying its own perm multiplication `·_V`
/// compatible with the action:
///
/// ```text
/// r(a)(u·w) = r(a)(w·u) = u·(r(a)w)
/// (l(a)u)·w = (r(a)u)·w = l(a)(u·w) = u·(l(a)w)
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct APermAlgebra {
    pub rep: Representation,
    /// Structure constants of `·_V`, index `((p*vdim)+q)*vdim + s`.
    vmult: Vec<Scalar>,
}

impl APermAlgebra {
    pub fn new(rep: Representation, vmult_entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let m = rep.vdim();
        let mut vmult = vec![Scalar::zero(); m * m * m];
        for (p, q, s, v) in vmult_entries {
            if *p >= m || *q >= m || *s >= m {
                return Err(Error::Invalid(format!(
                    "vmult index ({p},{q},{s}) out of range for vdim {m}"
                )));
            }
            vmult[(*p * m + *q) * m + *s] += v;
        }
        Ok(APermAlgebra { rep, vmult })
    }

    pub fn with_zero_mult(rep: Representation) -> Self {
        let m = rep.vdim();
        APermAlgebra {
            rep,
            vmult: vec![Scalar::zero(); m * m * m],
        }
    }

    pub fn vdim(&self) -> usize {
        self.rep.vdim()
    }

    pub fn vmult_c(&self, p: usize, q: usize, s: usize) -> &Scalar {
        let m = self.vdim();
        &self.vmult[(p * m + q) * m + s]
    }

    /// The multiplication `·_V` as a standalone algebra on V.
    pub fn v_algebra(&self) -> PermAlgebra {
        let m = self.vdim();
        let mut alg =
            PermAlgebra::zero(m).with_labels(self.rep.space_labels().to_vec());
        for p in 0..m {
            for q in 0..m {
                for s in 0..m {
                    let v = self.vmult_c(p, q, s);
                    if !v.is_zero() {
                        alg.set_c(p, q, s, v.clone());
                    }
                }
            }
        }
        alg
    }

    pub fn v_product(&self, p: usize, q: usize) -> Vector {
        let m = self.vdim();
        Vector::from_entries((0..m).map(|s| self.vmult_c(p, q, s).clone()).collect())
    }

    /// Representation defects, perm defects of `·_V`, and the two
    /// compatibility families at basis tuples; empty exactly when this is
    /// an A-perm algebra.
    pub fn defects(&self) -> APermReport {
        let rep_defects = self.rep.defects();
        let v_algebra_defects = self.v_algebra().perm_axiom_defects();
        let valg = self.v_algebra();
        let n = self.rep.base().dim();
        let m = self.vdim();
        let mut compat = Vec::new();
        let mut push = |family: &'static str, a: usize, p: usize, q: usize, defect: Vector| {
            if !defect.is_zero() {
                compat.push(CompatDefect {
                    family,
                    a,
                    p,
                    q,
                    defect,
                });
            }
        };
        for a in 0..n {
            let la = self.rep.l_basis(a);
            let ra = self.rep.r_basis(a);
            for p in 0..m {
                for q in 0..m {
                    let uw = self.v_product(p, q);
                    let wu = self.v_product(q, p);
                    let fp = Vector::basis(m, p);
                    let fq = Vector::basis(m, q);

                    // r(a)(u·w) = r(a)(w·u) = u·(r(a)w)
                    let x1 = ra.apply(&uw);
                    let x2 = ra.apply(&wu);
                    let x3 = valg.multiply(&fp, &ra.apply(&fq)).expect("dims");
                    push("r(a)(uw)-r(a)(wu)", a, p, q, &x1 - &x2);
                    push("r(a)(wu)-u(r(a)w)", a, p, q, &x2 - &x3);

                    // (l(a)u)·w = (r(a)u)·w = l(a)(u·w) = u·(l(a)w)
                    let y1 = valg.multiply(&la.apply(&fp), &fq).expect("dims");
                    let y2 = valg.multiply(&ra.apply(&fp), &fq).expect("dims");
                    let y3 = la.apply(&uw);
                    let y4 = valg.multiply(&fp, &la.apply(&fq)).expect("dims");
                    push("(l(a)u)w-(r(a)u)w", a, p, q, &y1 - &y2);
                    push("(r(a)u)w-l(a)(uw)", a, p, q, &y2 - &y3);
                    push("l(a)(uw)-u(l(a)w)", a, p, q, &y3 - &y4);
                }
            }
        }
        APermReport {
            rep_defects,
            v_algebra_defects,
            compat,
        }
    }

    pub fn is_a_perm_algebra(&self) -> bool {
        self.defects().is_clean()
    }
}

#[derive(Clone, Debug)]
pub struct CompatDefect {
    pub family: &'static str,
    pub a: usize,
    pub p: usize,
    pub q: usize,
    pub defect: Vector,
}

#[derive(Clone, Debug)]
pub struct APermReport {
    pub rep_defects: Vec<RepresentationDefect>,
    pub v_algebra_defects: Vec<crate::perm::AxiomDefect>,
    pub compat: Vec<CompatDefect>,
}

impl APermReport {
    pub fn is_clean(&self) -> bool {
        self.rep_defects.is_empty()
            && self.v_algebra_defects.is_empty()
            && self.compat.is_empty()
    }
}

/// The A-perm algebra `(A*, L*, ad*, ⋄_s)` built from a skew-symmetric
/// `(R, ad)`-invariant tensor `s`: `a* ⋄ b* = L*(T_s(a*)) b*`.
pub fn diamond_from_skew(alg: &PermAlgebra, s: &TwoTensor) -> Result<APermAlgebra> {
    if s.dim() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "diamond on dim-{} algebra got tensor of dim {}",
            alg.dim(),
            s.dim()
        )));
    }
    if !s.is_skew() {
        return Err(Error::NotSkew);
    }
    if !rad_invariance_defect(alg, s)?.is_empty() {
        return Err(Error::NotInvariant);
    }
    let n = alg.dim();
    let rep = Representation::coadjoint(alg);
    let t = s.t_map();
    let mut entries = Vec::new();
    for i in 0..n {
        let l_star = alg.left_mult(&t.column(i))?.transpose();
        for j in 0..n {
            let product = l_star.apply(&Vector::basis(n, j));
            for k in 0..n {
                if !product[k].is_zero() {
                    entries.push((i, j, k, product[k].clone()));
                }
            }
        }
    }
    APermAlgebra::new(rep, &entries)
}

/// A defect of the relative Rota-Baxter identity at one basis pair of V.
#[derive(Clone, Debug)]
pub struct RelativeRbDefect {
    pub p: usize,
    pub q: usize,
    pub defect: Vector,
}

/// Defects of `T(u)·T(w) − T(l(Tu)w + r(Tw)u + λ u·w)` at basis pairs of V;
/// empty exactly when `T` is a relative Rota-Baxter operator of weight λ.
pub fn relative_rb_defect(
    x: &APermAlgebra,
    t: &Matrix,
    weight: &Scalar,
) -> Result<Vec<RelativeRbDefect>> {
    let base = x.rep.base();
    let n = base.dim();
    let m = x.vdim();
    if t.rows() != n || t.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "operator must map V (dim {m}) to A (dim {n}), got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    let mut out = Vec::new();
    for p in 0..m {
        let tu = t.column(p);
        let l_tu = x.rep.l_of(&tu);
        for q in 0..m {
            let tw = t.column(q);
            let r_tw = x.rep.r_of(&tw);
            let lhs = base.multiply(&tu, &tw)?;
            let inner = &(&l_tu.apply(&Vector::basis(m, q))
                + &r_tw.apply(&Vector::basis(m, p)))
                + &x.v_product(p, q).scale(weight);
            let rhs = t.apply(&inner);
            let defect = &lhs - &rhs;
            if !defect.is_zero() {
                out.push(RelativeRbDefect { p, q, defect });
            }
        }
    }
    Ok(out)
}

/// Operator-form defects of a 2-tensor at all dual-basis pairs.
///
/// The three families vanish under these conditions:
/// `t_r_form` exactly when `r` solves the perm Yang-Baxter equation;
/// `t_sigma_form` and `relative_rb_form` are equivalent to it when the
/// skew part of `r` is `(R, ad)`-invariant.
#[derive(Clone, Debug)]
pub struct OperatorFormReport {
    pub t_r_form: Vec<(usize, usize, Vector)>,
    pub t_sigma_form: Vec<(usize, usize, Vector)>,
    pub relative_rb_form: Vec<(usize, usize, Vector)>,
}

impl OperatorFormReport {
    pub fn is_clean(&self) -> bool {
        self.t_r_form.is_empty()
            && self.t_sigma_form.is_empty()
            && self.relative_rb_form.is_empty()
    }
}

pub fn operator_form_defects(alg: &PermAlgebra, r: &TwoTensor) -> Result<OperatorFormReport> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "operator form on dim-{} algebra got tensor of dim {}",
            n,
            r.dim()
        )));
    }
    let t_r = r.t_map();
    let t_sigma = r.twist().t_map();
    let t_skew = r.sub(&r.twist()).t_map();
    let mut t_r_form = Vec::new();
    let mut t_sigma_form = Vec::new();
    let mut relative_rb_form = Vec::new();
    for i in 0..n {
        let x = t_r.column(i);
        let xs = t_sigma.column(i);
        let l_star_x = alg.left_mult(&x)?.transpose();
        let l_star_skew = alg.left_mult(&t_skew.column(i))?.transpose();
        for j in 0..n {
            let y = t_r.column(j);
            let ys = t_sigma.column(j);
            let ei = Vector::basis(n, i);
            let ej = Vector::basis(n, j);

            // T_r(a*)·T_r(b*) = T_r(L*(T_r a*)b* + ad*(T_σ b*)a*)
            let arg = &l_star_x.apply(&ej) + &alg.ad(&ys)?.transpose().apply(&ei);
            let d1 = &alg.multiply(&x, &y)? - &t_r.apply(&arg);
            if !d1.is_zero() {
                t_r_form.push((i, j, d1));
            }

            // Same argument through T_{σ(r)} on both sides.
            let d2 = &alg.multiply(&xs, &ys)? - &t_sigma.apply(&arg);
            if !d2.is_zero() {
                t_sigma_form.push((i, j, d2));
            }

            // Weight −1 relative Rota-Baxter form:
            // T_r(a*)·T_r(b*) = T_r(L*(T_r a*)b* + ad*(T_r b*)a* − a*⋄b*)
            // with a*⋄b* = L*(T_{r−σ(r)}(a*))b*.
            let arg3 = &(&l_star_x.apply(&ej) + &alg.ad(&y)?.transpose().apply(&ei))
                - &l_star_skew.apply(&ej);
            let d3 = &alg.multiply(&x, &y)? - &t_r.apply(&arg3);
            if !d3.is_zero() {
                relative_rb_form.push((i, j, d3));
            }
        }
    }
    Ok(OperatorFormReport {
        t_r_form,
        t_sigma_form,
        relative_rb_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::classify;
    use crate::catalog;
    use crate::tensor::pybe_defect;

    #[test]
    fn zero_actions_form_a_representation() {
        let rep = Representation::new(
            catalog::lperm2(),
            vec![Matrix::zeros(3, 3), Matrix::zeros(3, 3)],
            vec![Matrix::zeros(3, 3), Matrix::zeros(3, 3)],
        )
        .unwrap();
        assert!(rep.defects().is_empty());
    }

    #[test]
    fn regular_representation_is_a_representation() {
        for alg in [catalog::lperm2(), catalog::nilp2()] {
            assert!(Representation::regular(&alg).is_representation());
        }
    }

    #[test]
    fn swapped_regular_actions_fail() {
        let alg = catalog::lperm2();
        let n = alg.dim();
        let rep = Representation::new(
            alg.clone(),
            (0..n).map(|i| alg.right_mult_basis(i)).collect(),
            (0..n).map(|i| alg.left_mult_basis(i)).collect(),
        )
        .unwrap();
        assert!(!rep.defects().is_empty());
    }

    #[test]
    fn dual_of_regular_is_coadjoint() {
        let alg = catalog::lperm2();
        let coadj = Representation::regular(&alg).dual().unwrap();
        assert!(coadj.is_representation());
        for i in 0..2 {
            assert_eq!(*coadj.l_basis(i), alg.left_mult_basis(i).transpose());
            assert_eq!(*coadj.r_basis(i), alg.ad_basis(i).transpose());
        }
        assert_eq!(coadj.space_labels(), ["e1*", "e2*"]);
    }

    #[test]
    fn double_dual_restores_the_actions() {
        let rep = Representation::regular(&catalog::lperm2());
        let double_dual = rep.dual().unwrap().dual().unwrap();
        for i in 0..2 {
            assert_eq!(double_dual.l_basis(i), rep.l_basis(i));
            assert_eq!(double_dual.r_basis(i), rep.r_basis(i));
        }
    }

    #[test]
    fn dual_requires_a_representation() {
        let alg = catalog::lperm2();
        let broken = Representation::new(
            alg.clone(),
            vec![alg.right_mult_basis(0), alg.right_mult_basis(1)],
            vec![alg.left_mult_basis(0), alg.left_mult_basis(1)],
        )
        .unwrap();
        assert!(matches!(broken.dual(), Err(Error::NotARepresentation)));
    }

    #[test]
    fn semidirect_product_certifies_representations() {
        // Axiom oracle in both directions.
        let coadj = Representation::coadjoint(&catalog::lperm2());
        let sd = coadj.semidirect_product();
        assert_eq!(sd.dim(), 4);
        assert!(sd.perm_axiom_defects().is_empty());

        let alg = catalog::lperm2();
        let broken = Representation::new(
            alg.clone(),
            vec![alg.right_mult_basis(0), alg.right_mult_basis(1)],
            vec![alg.left_mult_basis(0), alg.left_mult_basis(1)],
        )
        .unwrap();
        assert!(!broken.semidirect_product().perm_axiom_defects().is_empty());

        let zero_rep = Representation::new(
            PermAlgebra::zero(1),
            vec![Matrix::zeros(2, 2)],
            vec![Matrix::zeros(2, 2)],
        )
        .unwrap();
        let sd = zero_rep.semidirect_product();
        assert_eq!(sd.dim(), 3);
        assert!(sd.entries().is_empty());
    }

    #[test]
    fn regular_a_perm_algebra() {
        // (A, L, R, ·_A) is an A-perm algebra.
        let alg = catalog::lperm2();
        let rep = Representation::regular(&alg);
        let x = APermAlgebra::new(
            rep,
            &alg.entries(),
        )
        .unwrap();
        assert!(x.is_a_perm_algebra());
    }

    #[test]
    fn zero_vmult_reduces_to_representation_defects() {
        let coadj = Representation::coadjoint(&catalog::nilp2());
        let x = APermAlgebra::with_zero_mult(coadj);
        let report = x.defects();
        assert!(report.is_clean());
        assert!(report.v_algebra_defects.is_empty());
        assert!(report.compat.is_empty());
    }

    #[test]
    fn arbitrary_vmult_over_coadjoint_generally_fails() {
        let coadj = Representation::coadjoint(&catalog::lperm2());
        let x = APermAlgebra::new(
            coadj,
            &[(0, 0, 0, Scalar::one()), (1, 1, 0, Scalar::one())],
        )
        .unwrap();
        assert!(!x.is_a_perm_algebra());
    }

    #[test]
    fn diamond_trivial_cases() {
        // s = 0 gives the zero multiplication over the coadjoint rep.
        let x = diamond_from_skew(&catalog::lperm2(), &TwoTensor::zero(2)).unwrap();
        assert!(x.v_algebra().entries().is_empty());
        assert!(x.is_a_perm_algebra());

        // Any skew s over a zero algebra: L = 0 forces ⋄ = 0.
        let skew = TwoTensor::from_entries(
            3,
            &[(0, 1, Scalar::from(5)), (1, 0, Scalar::from(-5))],
        )
        .unwrap();
        let x = diamond_from_skew(&PermAlgebra::zero(3), &skew).unwrap();
        assert!(x.v_algebra().entries().is_empty());
    }

    #[test]
    fn diamond_rejects_bad_tensors() {
        assert!(matches!(
            diamond_from_skew(&catalog::lperm2(), &TwoTensor::basis(2, 0, 0)),
            Err(Error::NotSkew)
        ));
        let skew = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::one()), (1, 0, Scalar::from(-1))],
        )
        .unwrap();
        assert!(matches!(
            diamond_from_skew(&catalog::nilp2(), &skew),
            Err(Error::NotInvariant)
        ));
    }

    #[test]
    fn diamond_from_invariant_skew_is_a_perm_algebra() {
        let alg = catalog::lperm2();
        let skew = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::from(2)), (1, 0, Scalar::from(-2))],
        )
        .unwrap();
        let x = diamond_from_skew(&alg, &skew).unwrap();
        assert!(x.is_a_perm_algebra());
    }

    #[test]
    fn zero_operator_is_relative_rb_for_all_weights() {
        let x = APermAlgebra::with_zero_mult(Representation::coadjoint(&catalog::lperm2()));
        let t = Matrix::zeros(2, 2);
        for w in [Scalar::zero(), Scalar::one(), Scalar::from(-7)] {
            assert!(relative_rb_defect(&x, &t, &w).unwrap().is_empty());
        }
    }

    #[test]
    fn zero_vmult_makes_weight_irrelevant() {
        // With u·w = 0 the identity is the O-operator condition for any λ.
        let x = APermAlgebra::with_zero_mult(Representation::coadjoint(&catalog::lperm2()));
        let t = Matrix::from_int_rows(&[&[1, 0], &[2, -1]]);
        let base: Vec<_> = relative_rb_defect(&x, &t, &Scalar::zero())
            .unwrap()
            .iter()
            .map(|d| (d.p, d.q, d.defect.clone()))
            .collect();
        for w in [Scalar::one(), Scalar::from(5), Scalar::ratio(-2, 3)] {
            let got: Vec<_> = relative_rb_defect(&x, &t, &w)
                .unwrap()
                .iter()
                .map(|d| (d.p, d.q, d.defect.clone()))
                .collect();
            assert_eq!(got, base);
        }
    }

    #[test]
    fn operator_form_trivial_cases() {
        assert!(operator_form_defects(&catalog::lperm2(), &TwoTensor::zero(2))
            .unwrap()
            .is_clean());
        let any = TwoTensor::from_entries(
            2,
            &[(0, 0, Scalar::from(3)), (1, 0, Scalar::one())],
        )
        .unwrap();
        assert!(operator_form_defects(&PermAlgebra::zero(2), &any)
            .unwrap()
            .is_clean());
    }

    #[test]
    fn operator_form_tracks_yang_baxter() {
        // Solutions give clean reports; the identity-table non-solution on
        // lperm2 shows up in the first family (Yang-Baxter oracle).
        let alg = catalog::lperm2();
        let good = TwoTensor::basis(2, 0, 0);
        assert!(pybe_defect(&alg, &good).unwrap().is_zero());
        assert!(operator_form_defects(&alg, &good).unwrap().is_clean());

        let bad = TwoTensor::from_entries(
            2,
            &[(0, 0, Scalar::one()), (1, 1, Scalar::one())],
        )
        .unwrap();
        assert!(!pybe_defect(&alg, &bad).unwrap().is_zero());
        let report = operator_form_defects(&alg, &bad).unwrap();
        assert!(!report.t_r_form.is_empty());
    }

    #[test]
    fn quasi_triangular_tensor_is_weight_minus_one_relative_rb() {
        // Against (A*, L*, ad*, ⋄_{r−σ(r)}).
        let alg = PermAlgebra::zero(2);
        let r = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::one()), (1, 0, Scalar::from(-1))],
        )
        .unwrap();
        assert!(classify(&alg, &r).unwrap().is_quasi_triangular());
        let x = diamond_from_skew(&alg, &r.sub(&r.twist())).unwrap();
        let defects = relative_rb_defect(&x, &r.t_map(), &Scalar::from(-1)).unwrap();
        assert!(defects.is_empty());
    }
}
