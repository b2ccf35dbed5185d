//! JSON file formats for every object the command-line tool handles.
//!
//! All documents carry a `kind` tag and a `dim`. Indices are 0-based and
//! scalars are `"p/q"` strings. Structure constants are sparse entry lists
//! `{"i":0,"j":1,"k":1,"c":"1"}` meaning the coefficient of `e_k` in
//! `e_i·e_j`; coproducts use `{"k":..,"i":..,"j":..,"c":..}` for the
//! coefficient of `e_i⊗e_j` in `Δ(e_k)`; tensors and forms use
//! `{"i":..,"j":..,"c":..}`. Operators are dense column lists: column `j`
//! holds the coordinates of the image of the `j`-th basis vector.
//!
//! Writing is canonical: entries sorted lexicographically, labels always
//! present, pretty-printed with a trailing newline. Loading an exported
//! file and exporting again reproduces it byte for byte.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bialgebra::{PermBialgebra, PermCoalgebra};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::perm::PermAlgebra;
use crate::representation::{APermAlgebra, Representation};
use crate::rotabaxter::{BilinearForm, QuadraticRbData};
use crate::scalar::Scalar;
use crate::tensor::TwoTensor;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoproductEntry {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub c: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub c: Scalar,
}

/// The algebra block embedded in representation documents.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraBlock {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub entries: Vec<StructureEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind")]
pub enum Document {
    #[serde(rename = "perm")]
    Perm {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        entries: Vec<StructureEntry>,
    },
    #[serde(rename = "coalgebra")]
    Coalgebra {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        entries: Vec<CoproductEntry>,
    },
    #[serde(rename = "bialgebra")]
    Bialgebra {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        algebra: Vec<StructureEntry>,
        coproduct: Vec<CoproductEntry>,
    },
    #[serde(rename = "tensor")]
    Tensor { dim: usize, entries: Vec<PairEntry> },
    #[serde(rename = "form")]
    Form { dim: usize, entries: Vec<PairEntry> },
    #[serde(rename = "operator")]
    Operator {
        rows: usize,
        cols: usize,
        columns: Vec<Vec<Scalar>>,
    },
    #[serde(rename = "representation")]
    Representation {
        base: AlgebraBlock,
        vdim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vlabels: Option<Vec<String>>,
        l: Vec<Vec<Vec<Scalar>>>,
        r: Vec<Vec<Vec<Scalar>>>,
    },
    #[serde(rename = "apermalgebra")]
    ApermAlgebra {
        base: AlgebraBlock,
        vdim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vlabels: Option<Vec<String>>,
        l: Vec<Vec<Vec<Scalar>>>,
        r: Vec<Vec<Vec<Scalar>>>,
        vmult: Vec<StructureEntry>,
    },
    #[serde(rename = "quadratic")]
    Quadratic {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        algebra: Vec<StructureEntry>,
        form: Vec<PairEntry>,
    },
    #[serde(rename = "quadratic-rb")]
    QuadraticRb {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        algebra: Vec<StructureEntry>,
        form: Vec<PairEntry>,
        operator: Vec<Vec<Scalar>>,
        weight: Scalar,
    },
}

impl Document {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Document::Perm { .. } => "perm",
            Document::Coalgebra { .. } => "coalgebra",
            Document::Bialgebra { .. } => "bialgebra",
            Document::Tensor { .. } => "tensor",
            Document::Form { .. } => "form",
            Document::Operator { .. } => "operator",
            Document::Representation { .. } => "representation",
            Document::ApermAlgebra { .. } => "apermalgebra",
            Document::Quadratic { .. } => "quadratic",
            Document::QuadraticRb { .. } => "quadratic-rb",
        }
    }
}

fn structure_entries(alg: &PermAlgebra) -> Vec<StructureEntry> {
    alg.entries()
        .into_iter()
        .map(|(i, j, k, c)| StructureEntry { i, j, k, c })
        .collect()
}

fn coproduct_entries(co: &PermCoalgebra) -> Vec<CoproductEntry> {
    co.entries()
        .into_iter()
        .map(|(k, i, j, c)| CoproductEntry { k, i, j, c })
        .collect()
}

fn pair_entries_tensor(t: &TwoTensor) -> Vec<PairEntry> {
    t.entries()
        .into_iter()
        .map(|(i, j, c)| PairEntry { i, j, c })
        .collect()
}

fn pair_entries_form(f: &BilinearForm) -> Vec<PairEntry> {
    f.entries()
        .into_iter()
        .map(|(i, j, c)| PairEntry { i, j, c })
        .collect()
}

/// Dense column list of a matrix: `columns[j][i] = M[i][j]`.
pub fn matrix_columns(m: &Matrix) -> Vec<Vec<Scalar>> {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m[(i, j)].clone()).collect())
        .collect()
}

pub fn matrix_from_columns(rows: usize, cols: usize, columns: &[Vec<Scalar>]) -> Result<Matrix> {
    if columns.len() != cols || columns.iter().any(|c| c.len() != rows) {
        return Err(Error::Parse(format!(
            "expected {cols} columns of length {rows}"
        )));
    }
    Ok(Matrix::from_fn(rows, cols, |i, j| columns[j][i].clone()))
}

pub fn algebra_to_doc(alg: &PermAlgebra) -> Document {
    Document::Perm {
        dim: alg.dim(),
        labels: Some(alg.labels().to_vec()),
        entries: structure_entries(alg),
    }
}

pub fn algebra_from_parts(
    dim: usize,
    labels: &Option<Vec<String>>,
    entries: &[StructureEntry],
) -> Result<PermAlgebra> {
    let sparse: Vec<(usize, usize, usize, Scalar)> = entries
        .iter()
        .map(|e| (e.i, e.j, e.k, e.c.clone()))
        .collect();
    PermAlgebra::from_entries(dim, labels.clone(), &sparse)
}

pub fn coalgebra_to_doc(co: &PermCoalgebra) -> Document {
    Document::Coalgebra {
        dim: co.dim(),
        labels: Some(co.labels().to_vec()),
        entries: coproduct_entries(co),
    }
}

pub fn bialgebra_to_doc(b: &PermBialgebra) -> Document {
    Document::Bialgebra {
        dim: b.dim(),
        labels: Some(b.algebra.labels().to_vec()),
        algebra: structure_entries(&b.algebra),
        coproduct: coproduct_entries(&b.coproduct),
    }
}

pub fn tensor_to_doc(t: &TwoTensor) -> Document {
    Document::Tensor {
        dim: t.dim(),
        entries: pair_entries_tensor(t),
    }
}

pub fn form_to_doc(f: &BilinearForm) -> Document {
    Document::Form {
        dim: f.dim(),
        entries: pair_entries_form(f),
    }
}

pub fn operator_to_doc(m: &Matrix) -> Document {
    Document::Operator {
        rows: m.rows(),
        cols: m.cols(),
        columns: matrix_columns(m),
    }
}

pub fn representation_to_doc(rep: &Representation) -> Document {
    Document::Representation {
        base: AlgebraBlock {
            dim: rep.base().dim(),
            labels: Some(rep.base().labels().to_vec()),
            entries: structure_entries(rep.base()),
        },
        vdim: rep.vdim(),
        vlabels: Some(rep.space_labels().to_vec()),
        l: (0..rep.base().dim())
            .map(|i| matrix_columns(rep.l_basis(i)))
            .collect(),
        r: (0..rep.base().dim())
            .map(|i| matrix_columns(rep.r_basis(i)))
            .collect(),
    }
}

pub fn aperm_to_doc(x: &APermAlgebra) -> Document {
    let rep_doc = representation_to_doc(&x.rep);
    let (base, vdim, vlabels, l, r) = match rep_doc {
        Document::Representation {
            base,
            vdim,
            vlabels,
            l,
            r,
        } => (base, vdim, vlabels, l, r),
        _ => unreachable!(),
    };
    Document::ApermAlgebra {
        base,
        vdim,
        vlabels,
        l,
        r,
        vmult: x
            .v_algebra()
            .entries()
            .into_iter()
            .map(|(i, j, k, c)| StructureEntry { i, j, k, c })
            .collect(),
    }
}

pub fn quadratic_to_doc(alg: &PermAlgebra, form: &BilinearForm) -> Document {
    Document::Quadratic {
        dim: alg.dim(),
        labels: Some(alg.labels().to_vec()),
        algebra: structure_entries(alg),
        form: pair_entries_form(form),
    }
}

pub fn quadratic_rb_to_doc(d: &QuadraticRbData) -> Document {
    Document::QuadraticRb {
        dim: d.dim(),
        labels: Some(d.algebra.labels().to_vec()),
        algebra: structure_entries(&d.algebra),
        form: pair_entries_form(&d.form),
        operator: matrix_columns(&d.operator),
        weight: d.weight.clone(),
    }
}

pub fn coalgebra_from_parts(
    dim: usize,
    labels: &Option<Vec<String>>,
    entries: &[CoproductEntry],
) -> Result<PermCoalgebra> {
    let sparse: Vec<(usize, usize, usize, Scalar)> = entries
        .iter()
        .map(|e| (e.k, e.i, e.j, e.c.clone()))
        .collect();
    PermCoalgebra::from_entries(dim, labels.clone(), &sparse)
}

pub fn tensor_from_parts(dim: usize, entries: &[PairEntry]) -> Result<TwoTensor> {
    let sparse: Vec<(usize, usize, Scalar)> = entries
        .iter()
        .map(|e| (e.i, e.j, e.c.clone()))
        .collect();
    TwoTensor::from_entries(dim, &sparse)
}

pub fn form_from_parts(dim: usize, entries: &[PairEntry]) -> Result<BilinearForm> {
    let sparse: Vec<(usize, usize, Scalar)> = entries
        .iter()
        .map(|e| (e.i, e.j, e.c.clone()))
        .collect();
    BilinearForm::from_entries(dim, &sparse)
}

pub fn representation_from_parts(
    base: &AlgebraBlock,
    vdim: usize,
    vlabels: &Option<Vec<String>>,
    l: &[Vec<Vec<Scalar>>],
    r: &[Vec<Vec<Scalar>>],
) -> Result<Representation> {
    let alg = algebra_from_parts(base.dim, &base.labels, &base.entries)?;
    let n = alg.dim();
    if l.len() != n || r.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} action matrices per side, got {} and {}",
            l.len(),
            r.len()
        )));
    }
    let l_mats: Vec<Matrix> = l
        .iter()
        .map(|cols| matrix_from_columns(vdim, vdim, cols))
        .collect::<Result<_>>()?;
    let r_mats: Vec<Matrix> = r
        .iter()
        .map(|cols| matrix_from_columns(vdim, vdim, cols))
        .collect::<Result<_>>()?;
    let rep = Representation::new(alg, l_mats, r_mats)?;
    Ok(match vlabels {
        Some(ls) if ls.len() == vdim => rep.with_space_labels(ls.clone()),
        _ => rep,
    })
}

/// A loaded document interpreted as the domain object it describes.
pub enum Loaded {
    Algebra(PermAlgebra),
    Coalgebra(PermCoalgebra),
    Bialgebra(PermBialgebra),
    Tensor(TwoTensor),
    Form(BilinearForm),
    Operator(Matrix),
    Representation(Representation),
    ApermAlgebra(APermAlgebra),
    Quadratic(PermAlgebra, BilinearForm),
    QuadraticRb(QuadraticRbData),
}

pub fn interpret(doc: &Document) -> Result<Loaded> {
    Ok(match doc {
        Document::Perm {
            dim,
            labels,
            entries,
        } => Loaded::Algebra(algebra_from_parts(*dim, labels, entries)?),
        Document::Coalgebra {
            dim,
            labels,
            entries,
        } => Loaded::Coalgebra(coalgebra_from_parts(*dim, labels, entries)?),
        Document::Bialgebra {
            dim,
            labels,
            algebra,
            coproduct,
        } => {
            let alg = algebra_from_parts(*dim, labels, algebra)?;
            let co = coalgebra_from_parts(*dim, labels, coproduct)?;
            Loaded::Bialgebra(PermBialgebra::new(alg, co)?)
        }
        Document::Tensor { dim, entries } => Loaded::Tensor(tensor_from_parts(*dim, entries)?),
        Document::Form { dim, entries } => Loaded::Form(form_from_parts(*dim, entries)?),
        Document::Operator {
            rows,
            cols,
            columns,
        } => Loaded::Operator(matrix_from_columns(*rows, *cols, columns)?),
        Document::Representation {
            base,
            vdim,
            vlabels,
            l,
            r,
        } => Loaded::Representation(representation_from_parts(base, *vdim, vlabels, l, r)?),
        Document::ApermAlgebra {
            base,
            vdim,
            vlabels,
            l,
            r,
            vmult,
        } => {
            let rep = representation_from_parts(base, *vdim, vlabels, l, r)?;
            let sparse: Vec<(usize, usize, usize, Scalar)> = vmult
                .iter()
                .map(|e| (e.i, e.j, e.k, e.c.clone()))
                .collect();
            Loaded::ApermAlgebra(APermAlgebra::new(rep, &sparse)?)
        }
        Document::Quadratic {
            dim,
            labels,
            algebra,
            form,
        } => Loaded::Quadratic(
            algebra_from_parts(*dim, labels, algebra)?,
            form_from_parts(*dim, form)?,
        ),
        Document::QuadraticRb {
            dim,
            labels,
            algebra,
            form,
            operator,
            weight,
        } => {
            let alg = algebra_from_parts(*dim, labels, algebra)?;
            let f = form_from_parts(*dim, form)?;
            let op = matrix_from_columns(*dim, *dim, operator)?;
            Loaded::QuadraticRb(QuadraticRbData::new(alg, f, op, weight.clone())?)
        }
    })
}

/// Canonical serialized bytes of a document.
pub fn to_bytes(doc: &Document) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s.into_bytes()
}

pub fn save(path: &Path, doc: &Document) -> Result<()> {
    std::fs::write(path, to_bytes(doc))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Document> {
    let bytes = std::fs::read(path)?;
    serde_json::from_slice(&bytes)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Parse an element as comma-separated rationals, e.g. `"1,0,-1/2"`.
pub fn parse_element(s: &str, dim: usize) -> Result<Vector> {
    let parts: Vec<&str> = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',').collect()
    };
    if parts.len() != dim {
        return Err(Error::Parse(format!(
            "expected {dim} coordinates, got {}",
            parts.len()
        )));
    }
    let coords: Vec<Scalar> = parts
        .iter()
        .map(|p| p.trim().parse::<Scalar>())
        .collect::<Result<_>>()?;
    Ok(Vector::from_entries(coords))
}
