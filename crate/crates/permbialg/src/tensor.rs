//! 2- and 3-tensors over a perm algebra.
//!
//! A 2-tensor `r = Σ t[i][j] e_i⊗e_j` is stored as its coefficient table.
//! The associated map `T_r: A* → A` sends `e_i*` to `Σ_j t[i][j] e_j`, so
//! the matrix of `T_r` (acting on dual coordinates) is the transpose of the
//! coefficient table, and `T_{σ(r)}` has the table itself as its matrix.
//!
//! The six placement products of two 2-tensors inside `A⊗A⊗A` are, for
//! `r = Σ a_i⊗b_i` and `r' = Σ a'_j⊗b'_j`:
//!
//! ```text
//! r12·r'23 = Σ a_i ⊗ b_i·a'_j ⊗ b'_j      r13·r'23 = Σ a_i ⊗ a'_j ⊗ b_i·b'_j
//! r13·r'12 = Σ a_i·a'_j ⊗ b'_j ⊗ b_i      r12·r'13 = Σ a_i·a'_j ⊗ b_i ⊗ b'_j
//! r23·r'13 = Σ a'_j ⊗ a_i ⊗ b_i·b'_j      r23·r'12 = Σ a'_j ⊗ a_i·b'_j ⊗ b_i
//! ```
//!
//! and the perm Yang-Baxter expression is
//! `[[r,r]] = r12·r23 − r13·r23 + r12·r13 − r13·r12`.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::perm::PermAlgebra;
use crate::scalar::Scalar;

/// An element of `A⊗A` by coefficients `t[i][j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTensor {
    dim: usize,
    table: Matrix,
}

impl TwoTensor {
    pub fn zero(dim: usize) -> Self {
        TwoTensor {
            dim,
            table: Matrix::zeros(dim, dim),
        }
    }

    pub fn from_table(table: Matrix) -> Result<Self> {
        if !table.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "2-tensor table must be square, got {}x{}",
                table.rows(),
                table.cols()
            )));
        }
        Ok(TwoTensor {
            dim: table.rows(),
            table,
        })
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut table = Matrix::zeros(dim, dim);
        for (i, j, v) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::Invalid(format!(
                    "tensor index ({i},{j}) out of range for dim {dim}"
                )));
            }
            table[(*i, *j)] += v;
        }
        Ok(TwoTensor { dim, table })
    }

    /// `e_i ⊗ e_j` in dimension `dim`.
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zero(dim);
        t.table[(i, j)] = Scalar::one();
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.table[(i, j)]
    }

    pub fn table(&self) -> &Matrix {
        &self.table
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.table == self.table.transpose()
    }

    pub fn is_skew(&self) -> bool {
        (&self.table + &self.table.transpose()).is_zero()
    }

    /// The twist `σ(r)` with transposed coefficients.
    pub fn twist(&self) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            table: self.table.transpose(),
        }
    }

    /// The skew-symmetric part `(r − σ(r))/2`.
    pub fn skew_part(&self) -> TwoTensor {
        let half = Scalar::ratio(1, 2);
        TwoTensor {
            dim: self.dim,
            table: (&self.table - &self.table.transpose()).scale(&half),
        }
    }

    /// Matrix of `T_r: A* → A` in dual/primal bases; column `i` is row `i`
    /// of the coefficient table.
    pub fn t_map(&self) -> Matrix {
        self.table.transpose()
    }

    /// The 2-tensor whose `t_map` is the given matrix.
    pub fn from_t_map(m: &Matrix) -> Result<Self> {
        Self::from_table(m.transpose())
    }

    /// `(M ⊗ N)(r)`, i.e. `M` on the first slot and `N` on the second.
    pub fn apply_pair(&self, m: &Matrix, n: &Matrix) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            table: &(m * &self.table) * &n.transpose(),
        }
    }

    pub fn add(&self, other: &TwoTensor) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            table: &self.table + &other.table,
        }
    }

    pub fn sub(&self, other: &TwoTensor) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            table: &self.table - &other.table,
        }
    }

    pub fn scale(&self, c: &Scalar) -> TwoTensor {
        TwoTensor {
            dim: self.dim,
            table: self.table.scale(c),
        }
    }

    /// Pairing `⟨r, a*⊗b*⟩ = Σ t[i][j] a*_i b*_j`.
    pub fn pair(&self, astar: &Vector, bstar: &Vector) -> Scalar {
        astar.dot(&self.table.apply(bstar))
    }
}

/// An element of `A⊗A⊗A` by coefficients `u[x][y][z]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThreeTensor {
    dim: usize,
    u: Vec<Scalar>,
}

impl ThreeTensor {
    pub fn zero(dim: usize) -> Self {
        ThreeTensor {
            dim,
            u: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> &Scalar {
        &self.u[(x * self.dim + y) * self.dim + z]
    }

    pub(crate) fn get_mut(&mut self, x: usize, y: usize, z: usize) -> &mut Scalar {
        &mut self.u[(x * self.dim + y) * self.dim + z]
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &ThreeTensor) -> ThreeTensor {
        ThreeTensor {
            dim: self.dim,
            u: self
                .u
                .iter()
                .zip(other.u.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ThreeTensor) -> ThreeTensor {
        ThreeTensor {
            dim: self.dim,
            u: self
                .u
                .iter()
                .zip(other.u.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Apply a matrix on one slot (0, 1, or 2), identity on the others.
    pub fn apply_slot(&self, slot: usize, m: &Matrix) -> ThreeTensor {
        let n = self.dim;
        let mut out = ThreeTensor::zero(n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = self.get(x, y, z);
                    if v.is_zero() {
                        continue;
                    }
                    let idx = [x, y, z][slot];
                    for w in 0..n {
                        let c = &m[(w, idx)];
                        if !c.is_zero() {
                            let mut target = [x, y, z];
                            target[slot] = w;
                            *out.get_mut(target[0], target[1], target[2]) += v * c;
                        }
                    }
                }
            }
        }
        out
    }

    /// `(σ ⊗ id)`: swap the first two slots.
    pub fn swap12(&self) -> ThreeTensor {
        let n = self.dim;
        let mut out = ThreeTensor::zero(n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    *out.get_mut(x, y, z) = self.get(y, x, z).clone();
                }
            }
        }
        out
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for x in 0..self.dim {
            for y in 0..self.dim {
                for z in 0..self.dim {
                    let v = self.get(x, y, z);
                    if !v.is_zero() {
                        out.push((x, y, z, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// The six placements of a product of two 2-tensors in `A⊗A⊗A`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Placement {
    /// `r12·r'23`
    P12x23,
    /// `r13·r'23`
    P13x23,
    /// `r13·r'12`
    P13x12,
    /// `r12·r'13`
    P12x13,
    /// `r23·r'13`
    P23x13,
    /// `r23·r'12`
    P23x12,
}

impl Placement {
    pub const ALL: [Placement; 6] = [
        Placement::P12x23,
        Placement::P13x23,
        Placement::P13x12,
        Placement::P12x13,
        Placement::P23x13,
        Placement::P23x12,
    ];
}

/// One placement product of `r` and `rp` over the multiplication of `alg`.
pub fn placement_product(
    alg: &PermAlgebra,
    r: &TwoTensor,
    rp: &TwoTensor,
    placement: Placement,
) -> Result<ThreeTensor> {
    let n = alg.dim();
    if r.dim() != n || rp.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "placement product on dim-{} algebra got tensors of dims {} and {}",
            n,
            r.dim(),
            rp.dim()
        )));
    }
    let mut out = ThreeTensor::zero(n);
    // r = Σ t[p][q] e_p⊗e_q, r' = Σ s[u][v] e_u⊗e_v; one loop nest per
    // placement, writing the product basis expansion directly.
    for p in 0..n {
        for q in 0..n {
            let t = r.get(p, q);
            if t.is_zero() {
                continue;
            }
            for u in 0..n {
                for v in 0..n {
                    let s = rp.get(u, v);
                    if s.is_zero() {
                        continue;
                    }
                    let coeff = t * s;
                    match placement {
                        // e_p ⊗ e_q·e_u ⊗ e_v
                        Placement::P12x23 => {
                            for k in 0..n {
                                let c = alg.c(q, u, k);
                                if !c.is_zero() {
                                    *out.get_mut(p, k, v) += &coeff * c;
                                }
                            }
                        }
                        // e_p ⊗ e_u ⊗ e_q·e_v
                        Placement::P13x23 => {
                            for k in 0..n {
                                let c = alg.c(q, v, k);
                                if !c.is_zero() {
                                    *out.get_mut(p, u, k) += &coeff * c;
                                }
                            }
                        }
                        // e_p·e_u ⊗ e_v ⊗ e_q
                        Placement::P13x12 => {
                            for k in 0..n {
                                let c = alg.c(p, u, k);
                                if !c.is_zero() {
                                    *out.get_mut(k, v, q) += &coeff * c;
                                }
                            }
                        }
                        // e_p·e_u ⊗ e_q ⊗ e_v
                        Placement::P12x13 => {
                            for k in 0..n {
                                let c = alg.c(p, u, k);
                                if !c.is_zero() {
                                    *out.get_mut(k, q, v) += &coeff * c;
                                }
                            }
                        }
                        // e_u ⊗ e_p ⊗ e_q·e_v
                        Placement::P23x13 => {
                            for k in 0..n {
                                let c = alg.c(q, v, k);
                                if !c.is_zero() {
                                    *out.get_mut(u, p, k) += &coeff * c;
                                }
                            }
                        }
                        // e_u ⊗ e_p·e_v ⊗ e_q
                        Placement::P23x12 => {
                            for k in 0..n {
                                let c = alg.c(p, v, k);
                                if !c.is_zero() {
                                    *out.get_mut(u, k, q) += &coeff * c;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The perm Yang-Baxter defect `[[r,r]]`; zero exactly when `r` solves the
/// perm Yang-Baxter equation in `alg`.
pub fn pybe_defect(alg: &PermAlgebra, r: &TwoTensor) -> Result<ThreeTensor> {
    let a = placement_product(alg, r, r, Placement::P12x23)?;
    let b = placement_product(alg, r, r, Placement::P13x23)?;
    let c = placement_product(alg, r, r, Placement::P12x13)?;
    let d = placement_product(alg, r, r, Placement::P13x12)?;
    Ok(a.sub(&b).add(&c).sub(&d))
}

/// Per basis element `a = e_i`, the tensor `(id⊗R(a) − ad(a)⊗id)(r)`.
/// Only nonzero defects are reported; the list is empty exactly when `r`
/// is `(R, ad)`-invariant (the condition is linear in `a`).
pub fn rad_invariance_defect(
    alg: &PermAlgebra,
    r: &TwoTensor,
) -> Result<Vec<(usize, TwoTensor)>> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "invariance defect on dim-{} algebra got tensor of dim {}",
            n,
            r.dim()
        )));
    }
    let mut out = Vec::new();
    for i in 0..n {
        let d = invariance_defect_at(alg, r, i);
        if !d.is_zero() {
            out.push((i, d));
        }
    }
    Ok(out)
}

/// `(id⊗R(e_i) − ad(e_i)⊗id)(r)` as a table: `t·R(e_i)ᵀ − ad(e_i)·t`.
pub(crate) fn invariance_defect_at(alg: &PermAlgebra, r: &TwoTensor, i: usize) -> TwoTensor {
    let right = alg.right_mult_basis(i);
    let ad = alg.ad_basis(i);
    let first = r.table() * &right.transpose();
    let second = &ad * r.table();
    TwoTensor {
        dim: r.dim(),
        table: &first - &second,
    }
}

/// The four coboundary compatibility conditions for `Δ_r`.
///
/// The first two are quantified over pairs `(a, b)` of basis elements and
/// produce 2-tensor defects; the last two are displayed with a single free
/// `a` and are therefore evaluated at basis singletons, producing 3-tensor
/// defects. All four vanish exactly when `(A, ·, Δ_r)` is a perm bialgebra.
#[derive(Clone, Debug)]
pub struct CoboundaryReport {
    pub pair_family_one: Vec<(usize, usize, TwoTensor)>,
    pub pair_family_two: Vec<(usize, usize, TwoTensor)>,
    pub singleton_family_three: Vec<(usize, ThreeTensor)>,
    pub singleton_family_four: Vec<(usize, ThreeTensor)>,
}

impl CoboundaryReport {
    pub fn is_clean(&self) -> bool {
        self.pair_family_one.is_empty()
            && self.pair_family_two.is_empty()
            && self.singleton_family_three.is_empty()
            && self.singleton_family_four.is_empty()
    }
}

pub fn coboundary_conditions_defect(
    alg: &PermAlgebra,
    r: &TwoTensor,
) -> Result<CoboundaryReport> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "coboundary conditions on dim-{} algebra got tensor of dim {}",
            n,
            r.dim()
        )));
    }
    let skew_double = r.sub(&r.twist()); // r − σ(r)
    let w = skew_double.table();

    let mut pair_family_one = Vec::new();
    let mut pair_family_two = Vec::new();
    for i in 0..n {
        let r_i = alg.right_mult_basis(i);
        let ad_i = alg.ad_basis(i);
        for j in 0..n {
            let r_j = alg.right_mult_basis(j);
            let ad_j = alg.ad_basis(j);

            // (R(a) ⊗ R(b))(r − σ(r)) at (a,b) = (e_i, e_j)
            let f1 = &(&r_i * w) * &r_j.transpose();
            if !f1.is_zero() {
                pair_family_one.push((i, j, TwoTensor { dim: n, table: f1 }));
            }

            // ((R(b·a) − R(a·b)) ⊗ id − ad(b) ⊗ ad(a))(r − σ(r))
            let r_ba = alg.right_mult(&alg.basis_product(j, i))?;
            let r_ab = alg.right_mult(&alg.basis_product(i, j))?;
            let term1 = &(&r_ba - &r_ab) * w;
            let term2 = &(&ad_j * w) * &ad_i.transpose();
            let f2 = &term1 - &term2;
            if !f2.is_zero() {
                pair_family_two.push((i, j, TwoTensor { dim: n, table: f2 }));
            }
        }
    }

    let yb = pybe_defect(alg, r)?;
    let yb_swapped = yb.swap12();
    let neg_skew = skew_double.scale(&Scalar::from(-1)); // σ(r) − r
    // (σ(r)−r)12·r23 + (σ(r)−r)12·r13 − r13·(σ(r)−r)12
    let q3 = placement_product(alg, &neg_skew, r, Placement::P12x23)?
        .add(&placement_product(alg, &neg_skew, r, Placement::P12x13)?)
        .sub(&placement_product(alg, r, &neg_skew, Placement::P13x12)?);
    let q3_swapped = q3.swap12();
    // (r−σ(r))12·r23 and (r−σ(r))12·r13
    let w23 = placement_product(alg, &skew_double, r, Placement::P12x23)?;
    let w13 = placement_product(alg, &skew_double, r, Placement::P12x13)?;

    let mut singleton_family_three = Vec::new();
    let mut singleton_family_four = Vec::new();
    for i in 0..n {
        let r_i = alg.right_mult_basis(i);
        let ad_i = alg.ad_basis(i);

        // (id⊗id⊗R(a))[[r,r]] − (ad(a)⊗id⊗id)(σ⊗id)[[r,r]]
        //   − (ad(a)⊗id⊗id)(σ⊗id)((σ(r)−r)12·r23 + (σ(r)−r)12·r13 − r13·(σ(r)−r)12)
        let f3 = yb
            .apply_slot(2, &r_i)
            .sub(&yb_swapped.apply_slot(0, &ad_i))
            .sub(&q3_swapped.apply_slot(0, &ad_i));
        if !f3.is_zero() {
            singleton_family_three.push((i, f3));
        }

        // (id⊗id⊗R(a))(id − σ⊗id)[[r,r]]
        //   − (id⊗ad(a)⊗id)((r−σ(r))12·r23) − (ad(a)⊗id⊗id)((r−σ(r))12·r13)
        let f4 = yb
            .sub(&yb_swapped)
            .apply_slot(2, &r_i)
            .sub(&w23.apply_slot(1, &ad_i))
            .sub(&w13.apply_slot(0, &ad_i));
        if !f4.is_zero() {
            singleton_family_four.push((i, f4));
        }
    }

    Ok(CoboundaryReport {
        pair_family_one,
        pair_family_two,
        singleton_family_three,
        singleton_family_four,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn twist_is_an_involution() {
        let r = TwoTensor::from_entries(
            3,
            &[
                (0, 1, Scalar::one()),
                (2, 0, Scalar::ratio(-1, 2)),
                (1, 1, Scalar::from(3)),
            ],
        )
        .unwrap();
        assert_eq!(r.twist().twist(), r);
        assert_eq!(
            TwoTensor::basis(2, 0, 1).twist(),
            TwoTensor::basis(2, 1, 0)
        );
        let sym = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::one()), (1, 0, Scalar::one())],
        )
        .unwrap();
        assert_eq!(sym.twist(), sym);
    }

    #[test]
    fn skew_part_halves_the_antisymmetrization() {
        let r = TwoTensor::basis(2, 0, 1);
        let s = r.skew_part();
        assert_eq!(*s.get(0, 1), Scalar::ratio(1, 2));
        assert_eq!(*s.get(1, 0), Scalar::ratio(-1, 2));
        assert!(s.is_skew());
        // Symmetric input → zero; skew input → itself.
        let sym = TwoTensor::from_entries(2, &[(0, 0, Scalar::from(2))]).unwrap();
        assert!(sym.skew_part().is_zero());
        let skew = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::one()), (1, 0, Scalar::from(-1))],
        )
        .unwrap();
        assert_eq!(skew.skew_part(), skew);
    }

    #[test]
    fn t_map_convention() {
        assert!(TwoTensor::zero(3).t_map().is_zero());
        // Column i of the matrix is row i of the table.
        let r = TwoTensor::from_entries(2, &[(0, 1, Scalar::from(5))]).unwrap();
        let m = r.t_map();
        assert_eq!(m[(1, 0)], Scalar::from(5));
        assert_eq!(TwoTensor::from_t_map(&m).unwrap(), r);
    }

    #[test]
    fn t_map_pairing_oracle() {
        // ⟨T_r(a*), b*⟩ = ⟨r, a*⊗b*⟩ on fixed rational inputs.
        let r = TwoTensor::from_entries(
            3,
            &[
                (0, 1, Scalar::ratio(2, 3)),
                (1, 2, Scalar::from(-1)),
                (2, 2, Scalar::ratio(5, 7)),
            ],
        )
        .unwrap();
        let astar = Vector::from_entries(vec![
            Scalar::ratio(1, 2),
            Scalar::from(3),
            Scalar::from(-2),
        ]);
        let bstar = Vector::from_entries(vec![
            Scalar::from(1),
            Scalar::ratio(-1, 3),
            Scalar::from(4),
        ]);
        let lhs = r.t_map().apply(&astar).dot(&bstar);
        assert_eq!(lhs, r.pair(&astar, &bstar));
    }

    #[test]
    fn placement_products_vanish_with_zero_factor_or_zero_algebra() {
        let alg = catalog::nilp2();
        let r = TwoTensor::basis(2, 0, 0);
        let z = TwoTensor::zero(2);
        for p in Placement::ALL {
            assert!(placement_product(&alg, &z, &r, p).unwrap().is_zero());
            assert!(placement_product(&alg, &r, &z, p).unwrap().is_zero());
        }
        let zero_alg = crate::perm::PermAlgebra::zero(2);
        for p in Placement::ALL {
            assert!(placement_product(&zero_alg, &r, &r, p).unwrap().is_zero());
        }
    }

    #[test]
    fn placement_12x23_on_nilp2() {
        // Expansion oracle: with r = r' = e1⊗e1 and e1·e1 = e2,
        // r12·r'23 = e1 ⊗ e1·e1 ⊗ e1 = e1⊗e2⊗e1.
        let alg = catalog::nilp2();
        let r = TwoTensor::basis(2, 0, 0);
        let got = placement_product(&alg, &r, &r, Placement::P12x23).unwrap();
        assert_eq!(got.entries(), vec![(0, 1, 0, Scalar::one())]);
    }

    #[test]
    fn placement_full_expansion_oracle() {
        // Brute-force oracle on a dense pair of tensors over lperm2: expand
        // Σ t[p][q]s[u][v] e_slot1⊗e_slot2⊗e_slot3 by hand for each placement.
        let alg = catalog::lperm2();
        let r = TwoTensor::from_entries(
            2,
            &[
                (0, 0, Scalar::one()),
                (0, 1, Scalar::from(2)),
                (1, 0, Scalar::from(-1)),
                (1, 1, Scalar::ratio(1, 2)),
            ],
        )
        .unwrap();
        let s = TwoTensor::from_entries(
            2,
            &[(0, 0, Scalar::from(3)), (1, 1, Scalar::from(-2))],
        )
        .unwrap();
        let n = 2;
        let mut expect = [
            ThreeTensor::zero(n),
            ThreeTensor::zero(n),
            ThreeTensor::zero(n),
            ThreeTensor::zero(n),
            ThreeTensor::zero(n),
            ThreeTensor::zero(n),
        ];
        for p in 0..n {
            for q in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        let coeff = r.get(p, q) * s.get(u, v);
                        if coeff.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            let add = |t: &mut ThreeTensor, x: usize, y: usize, z: usize, c: &Scalar| {
                                *t.get_mut(x, y, z) += &coeff * c;
                            };
                            add(&mut expect[0], p, k, v, alg.c(q, u, k));
                            add(&mut expect[1], p, u, k, alg.c(q, v, k));
                            add(&mut expect[2], k, v, q, alg.c(p, u, k));
                            add(&mut expect[3], k, q, v, alg.c(p, u, k));
                            add(&mut expect[4], u, p, k, alg.c(q, v, k));
                            add(&mut expect[5], u, k, q, alg.c(p, v, k));
                        }
                    }
                }
            }
        }
        for (idx, placement) in Placement::ALL.into_iter().enumerate() {
            assert_eq!(
                placement_product(&alg, &r, &s, placement).unwrap(),
                expect[idx],
                "placement {placement:?}"
            );
        }
    }

    #[test]
    fn pybe_trivial_cases() {
        let zero_alg = crate::perm::PermAlgebra::zero(3);
        let r = TwoTensor::from_entries(
            3,
            &[(0, 1, Scalar::one()), (2, 2, Scalar::from(-4))],
        )
        .unwrap();
        assert!(pybe_defect(&zero_alg, &r).unwrap().is_zero());
        let alg = catalog::lperm2();
        assert!(pybe_defect(&alg, &TwoTensor::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn pybe_on_lperm2_closed_form() {
        // On lperm2 the product is x·y = x_1 y, so
        // [[r,r]][x][y][z] = t[0][y]t[x][z] − t[0][z]t[x][y].
        let alg = catalog::lperm2();
        let r = TwoTensor::from_entries(
            2,
            &[(0, 0, Scalar::one()), (1, 1, Scalar::one())],
        )
        .unwrap();
        let defect = pybe_defect(&alg, &r).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let expect =
                        r.get(0, y) * r.get(x, z) - r.get(0, z) * r.get(x, y);
                    assert_eq!(*defect.get(x, y, z), expect);
                }
            }
        }
        assert!(!defect.is_zero());
        // A symmetric rank-one tensor in the e1 direction does solve it.
        let sym = TwoTensor::basis(2, 0, 0);
        assert!(pybe_defect(&alg, &sym).unwrap().is_zero());
    }

    #[test]
    fn invariance_trivial_and_failing_cases() {
        let zero_alg = crate::perm::PermAlgebra::zero(2);
        let any = TwoTensor::basis(2, 0, 1);
        assert!(rad_invariance_defect(&zero_alg, &any).unwrap().is_empty());

        // (id⊗R(e1))(e1⊗e1) = e1⊗e1 while (ad(e1)⊗id)(e1⊗e1) = 0 on lperm2.
        let alg = catalog::lperm2();
        let r = TwoTensor::basis(2, 0, 0);
        let defects = rad_invariance_defect(&alg, &r).unwrap();
        assert!(!defects.is_empty());
        let at_zero = defects.iter().find(|(i, _)| *i == 0).expect("defect at e1");
        assert_eq!(at_zero.1, TwoTensor::basis(2, 0, 0));
    }

    #[test]
    fn skew_tensors_on_lperm2_are_invariant() {
        let alg = catalog::lperm2();
        let skew = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::from(3)), (1, 0, Scalar::from(-3))],
        )
        .unwrap();
        assert!(rad_invariance_defect(&alg, &skew).unwrap().is_empty());
    }

    #[test]
    fn skew_tensors_on_nilp2_are_not_invariant() {
        let alg = catalog::nilp2();
        let skew = TwoTensor::from_entries(
            2,
            &[(0, 1, Scalar::one()), (1, 0, Scalar::from(-1))],
        )
        .unwrap();
        assert!(!rad_invariance_defect(&alg, &skew).unwrap().is_empty());
    }

    #[test]
    fn invariance_lemma_matrix_identities_for_skew_tensors() {
        // For skew invariant r: T_r ad*(a) = R(a) T_r, T_r R*(a) = ad(a) T_r,
        // and L*(T_r(a*))b* = ad*(T_r(b*))a*, checked on basis elements.
        for (alg, skew) in [
            (
                catalog::lperm2(),
                TwoTensor::from_entries(
                    2,
                    &[(0, 1, Scalar::from(2)), (1, 0, Scalar::from(-2))],
                )
                .unwrap(),
            ),
            (crate::perm::PermAlgebra::zero(2), TwoTensor::basis(2, 0, 1).skew_part()),
        ] {
            assert!(skew.is_skew());
            assert!(rad_invariance_defect(&alg, &skew).unwrap().is_empty());
            let n = alg.dim();
            let t = skew.t_map();
            for i in 0..n {
                let adt = alg.ad_basis(i).transpose();
                let rt = alg.right_mult_basis(i).transpose();
                assert_eq!(&t * &adt, &alg.right_mult_basis(i) * &t);
                assert_eq!(&t * &rt, &alg.ad_basis(i) * &t);
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = alg
                        .left_mult(&t.column(i))
                        .unwrap()
                        .transpose()
                        .apply(&Vector::basis(n, j));
                    let rhs = alg
                        .ad(&t.column(j))
                        .unwrap()
                        .transpose()
                        .apply(&Vector::basis(n, i));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn coboundary_conditions_trivial_cases() {
        let zero_alg = crate::perm::PermAlgebra::zero(2);
        let r = TwoTensor::from_entries(
            2,
            &[(0, 0, Scalar::one()), (1, 0, Scalar::from(7))],
        )
        .unwrap();
        assert!(coboundary_conditions_defect(&zero_alg, &r)
            .unwrap()
            .is_clean());
        let alg = catalog::lperm2();
        assert!(
            coboundary_conditions_defect(&alg, &TwoTensor::zero(2))
                .unwrap()
                .is_clean()
        );
    }

    #[test]
    fn coboundary_conditions_detect_bad_tensors() {
        // r = e1⊗e1 on nilp2 fails the Yang-Baxter equation with
        // [[r,r]] = e1⊗e2⊗e1 − e1⊗e1⊗e2, and since ad = 0 there, the third
        // family reduces to (id⊗id⊗R(a))[[r,r]]; at a = e1 this is
        // e1⊗e2⊗e2 (expansion oracle).
        let alg = catalog::nilp2();
        let r = TwoTensor::basis(2, 0, 0);
        let report = coboundary_conditions_defect(&alg, &r).unwrap();
        assert!(!report.is_clean());
        assert!(report.pair_family_one.is_empty());
        assert!(report.pair_family_two.is_empty());
        let (a, defect) = &report.singleton_family_three[0];
        assert_eq!(*a, 0);
        assert_eq!(defect.entries(), vec![(0, 1, 1, Scalar::one())]);
        // Fourth family at a = e1: e1⊗e2⊗e2 − e2⊗e1⊗e2.
        let (a, defect) = &report.singleton_family_four[0];
        assert_eq!(*a, 0);
        assert_eq!(
            defect.entries(),
            vec![
                (0, 1, 1, Scalar::one()),
                (1, 0, 1, Scalar::from(-1)),
            ]
        );
    }

    #[test]
    fn coboundary_conditions_hold_for_quasi_triangular_tensors() {
        // e2⊗e1 on lperm2 solves the Yang-Baxter equation with invariant
        // skew part, so all four families vanish.
        let alg = catalog::lperm2();
        let r = TwoTensor::basis(2, 1, 0);
        assert!(pybe_defect(&alg, &r).unwrap().is_zero());
        assert!(rad_invariance_defect(&alg, &r.sub(&r.twist()))
            .unwrap()
            .is_empty());
        assert!(coboundary_conditions_defect(&alg, &r).unwrap().is_clean());
    }
}
