//! Command-line surface: load objects from files, run defect checks,
//! classify tensors, construct doubles and Rota-Baxter correspondences.
//!
//! Exit codes: 0 when the check or construction is clean, 1 when the input
//! parses but has nonzero defects (or fails a semantic precondition such as
//! factorizability), 2 on input errors (unreadable or malformed files,
//! dimension mismatches, zero weight where a nonzero one is required).

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::bialgebra::{
    bialgebra_defects, classify, coboundary_coproduct, factorize, is_factorizable,
    PermBialgebra, PermCoalgebra,
};
use crate::catalog;
use crate::double::{build_double, canonical_r};
use crate::error::{Error, Result};
use crate::io::{self, Document, Loaded};
use crate::perm::PermAlgebra;
use crate::report::{DefectEntry, InputDigest, Report};
use crate::representation::{APermAlgebra, Representation};
use crate::rotabaxter::{
    qrb_to_r, quadratic_defects, quadratic_rb_defects, r_to_qrb, QuadraticRbData,
    QuadraticRbReport, QuadraticReport,
};
use crate::scalar::Scalar;
use crate::tensor::{pybe_defect, rad_invariance_defect, TwoTensor};

#[derive(Parser, Debug)]
#[command(name = "permbialg", version, about = "Exact verification kernel for perm algebras and their bialgebra theory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Suppress defect bodies in reports (counts are kept).
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the defect checks appropriate to a file kind.
    Check {
        path: PathBuf,
        #[arg(value_enum)]
        kind: CheckKind,
    },
    /// Classify a 2-tensor over a perm algebra.
    Classify {
        algebra: PathBuf,
        tensor: PathBuf,
    },
    /// Build the double of a perm bialgebra and its canonical tensor.
    Double {
        bialgebra: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Turn a quadratic Rota-Baxter structure into its coboundary tensor.
    RbToBialg {
        algebra: PathBuf,
        form: PathBuf,
        operator: PathBuf,
        /// Rota-Baxter weight as a rational, e.g. "1" or "-1/2".
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Turn a factorizable tensor into its quadratic Rota-Baxter structure.
    BialgToRb {
        algebra: PathBuf,
        tensor: PathBuf,
        /// Nonzero Rota-Baxter weight as a rational.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Factor an element as x = x1 − x2 through a factorizable tensor.
    Factorize {
        algebra: PathBuf,
        tensor: PathBuf,
        /// Comma-separated rational coordinates, e.g. "1,0,-1/2,0".
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// List or export the built-in instance catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// Print one line per entry: name, kind, provenance.
    List,
    /// Write the named entry to files in the output directory.
    Export {
        name: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum CheckKind {
    Perm,
    Coalgebra,
    Bialgebra,
    Representation,
    Apermalgebra,
    Quadratic,
    QuadraticRb,
}

/// Run a parsed command line; prints reports to stdout and returns the
/// process exit code.
pub fn run(cli: Cli) -> i32 {
    let mut ctx = Ctx {
        start: Instant::now(),
        inputs: Vec::new(),
        quiet: cli.quiet,
    };
    let outcome = dispatch(&cli.command, &mut ctx);
    match outcome {
        Ok(CommandOutput::Report(report, code)) => {
            emit(&report.to_json());
            code
        }
        Ok(CommandOutput::Lines(lines)) => {
            for line in lines {
                emit(&line);
            }
            0
        }
        Err(err) => {
            let report = Report::error(
                &err.to_string(),
                ctx.start.elapsed().as_millis(),
                ctx.inputs.clone(),
            );
            emit(&report.to_json());
            2
        }
    }
}

// Tolerate a closed stdout (e.g. piping into `head`).
fn emit(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

enum CommandOutput {
    Report(Report, i32),
    Lines(Vec<String>),
}

struct Ctx {
    start: Instant,
    inputs: Vec<InputDigest>,
    quiet: bool,
}

impl Ctx {
    fn load(&mut self, path: &Path) -> Result<Document> {
        let bytes = std::fs::read(path)?;
        let digest = Sha256::digest(&bytes);
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex,
        });
        serde_json::from_slice(&bytes)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    fn report(
        &self,
        defects: Vec<DefectEntry>,
        classification: Option<String>,
        data: Option<serde_json::Value>,
    ) -> (Report, i32) {
        let report = Report::new(
            defects,
            classification,
            data,
            self.start.elapsed().as_millis(),
            self.inputs.clone(),
            self.quiet,
        );
        let code = if report.defect_count == 0 { 0 } else { 1 };
        (report, code)
    }
}

fn dispatch(command: &Command, ctx: &mut Ctx) -> Result<CommandOutput> {
    match command {
        Command::Check { path, kind } => cmd_check(ctx, path, *kind),
        Command::Classify { algebra, tensor } => cmd_classify(ctx, algebra, tensor),
        Command::Double { bialgebra, out } => cmd_double(ctx, bialgebra, out),
        Command::RbToBialg {
            algebra,
            form,
            operator,
            weight,
            out,
        } => cmd_rb_to_bialg(ctx, algebra, form, operator, weight, out),
        Command::BialgToRb {
            algebra,
            tensor,
            weight,
            out,
        } => cmd_bialg_to_rb(ctx, algebra, tensor, weight, out),
        Command::Factorize {
            algebra,
            tensor,
            element,
        } => cmd_factorize(ctx, algebra, tensor, element),
        Command::Catalog { action } => cmd_catalog(ctx, action),
    }
}

fn load_algebra(ctx: &mut Ctx, path: &Path) -> Result<PermAlgebra> {
    match io::interpret(&ctx.load(path)?)? {
        Loaded::Algebra(a) => Ok(a),
        other => Err(Error::Parse(format!(
            "{}: expected a perm document, found {}",
            path.display(),
            loaded_kind(&other)
        ))),
    }
}

fn load_tensor(ctx: &mut Ctx, path: &Path) -> Result<TwoTensor> {
    match io::interpret(&ctx.load(path)?)? {
        Loaded::Tensor(t) => Ok(t),
        other => Err(Error::Parse(format!(
            "{}: expected a tensor document, found {}",
            path.display(),
            loaded_kind(&other)
        ))),
    }
}

fn loaded_kind(l: &Loaded) -> &'static str {
    match l {
        Loaded::Algebra(_) => "perm",
        Loaded::Coalgebra(_) => "coalgebra",
        Loaded::Bialgebra(_) => "bialgebra",
        Loaded::Tensor(_) => "tensor",
        Loaded::Form(_) => "form",
        Loaded::Operator(_) => "operator",
        Loaded::Representation(_) => "representation",
        Loaded::ApermAlgebra(_) => "apermalgebra",
        Loaded::Quadratic(..) => "quadratic",
        Loaded::QuadraticRb(_) => "quadratic-rb",
    }
}

// Defect-entry builders per object kind.

fn algebra_defect_entries(alg: &PermAlgebra) -> Vec<DefectEntry> {
    let mut out = Vec::new();
    for d in alg.perm_axiom_defects() {
        if !d.assoc.is_zero() {
            out.push(DefectEntry::from_vector("assoc", vec![d.i, d.j, d.k], &d.assoc));
        }
        if !d.left_comm.is_zero() {
            out.push(DefectEntry::from_vector(
                "left-comm",
                vec![d.i, d.j, d.k],
                &d.left_comm,
            ));
        }
    }
    out
}

fn coalgebra_defect_entries(co: &PermCoalgebra) -> Vec<DefectEntry> {
    let mut out = Vec::new();
    for (k, first, second) in co.coalgebra_defects() {
        if !first.is_zero() {
            out.push(DefectEntry::from_three_tensor("coassoc", vec![k], &first));
        }
        if !second.is_zero() {
            out.push(DefectEntry::from_three_tensor(
                "left-cocomm",
                vec![k],
                &second,
            ));
        }
    }
    out
}

fn bialgebra_defect_entries(b: &PermBialgebra) -> Vec<DefectEntry> {
    let mut out = algebra_defect_entries(&b.algebra);
    out.extend(coalgebra_defect_entries(&b.coproduct));
    let report = bialgebra_defects(b);
    for (name, family) in [
        ("bialg-law-1", &report.law_one),
        ("bialg-law-2", &report.law_two),
        ("bialg-law-3", &report.law_three),
    ] {
        for (i, j, d) in family {
            out.push(DefectEntry::from_two_tensor(name, vec![*i, *j], d));
        }
    }
    out
}

fn representation_defect_entries(rep: &Representation) -> Vec<DefectEntry> {
    rep.defects()
        .iter()
        .map(|d| DefectEntry::from_matrix(d.family, vec![d.i, d.j], &d.defect))
        .collect()
}

fn aperm_defect_entries(x: &APermAlgebra) -> Vec<DefectEntry> {
    let report = x.defects();
    let mut out: Vec<DefectEntry> = report
        .rep_defects
        .iter()
        .map(|d| DefectEntry::from_matrix(d.family, vec![d.i, d.j], &d.defect))
        .collect();
    for d in &report.v_algebra_defects {
        if !d.assoc.is_zero() {
            out.push(DefectEntry::from_vector(
                "vmult-assoc",
                vec![d.i, d.j, d.k],
                &d.assoc,
            ));
        }
        if !d.left_comm.is_zero() {
            out.push(DefectEntry::from_vector(
                "vmult-left-comm",
                vec![d.i, d.j, d.k],
                &d.left_comm,
            ));
        }
    }
    for d in &report.compat {
        out.push(DefectEntry::from_vector(
            d.family,
            vec![d.a, d.p, d.q],
            &d.defect,
        ));
    }
    out
}

fn quadratic_defect_entries(report: &QuadraticReport) -> Vec<DefectEntry> {
    let mut out = Vec::new();
    for (i, j, d) in &report.skew_defects {
        out.push(DefectEntry::from_scalar("skew", vec![*i, *j], d));
    }
    if report.rank != report.dim {
        out.push(DefectEntry {
            family: "rank-deficit".to_string(),
            indices: vec![report.rank, report.dim],
            components: Vec::new(),
        });
    }
    for (i, j, k, d) in &report.invariance_defects {
        out.push(DefectEntry::from_scalar("invariance", vec![*i, *j, *k], d));
    }
    out
}

fn quadratic_rb_defect_entries(report: &QuadraticRbReport) -> Vec<DefectEntry> {
    let mut out = quadratic_defect_entries(&report.quadratic);
    for d in &report.rb {
        out.push(DefectEntry::from_vector(
            "rota-baxter",
            vec![d.i, d.j],
            &d.defect,
        ));
    }
    for (i, j, d) in &report.compatibility {
        out.push(DefectEntry::from_scalar("compatibility", vec![*i, *j], d));
    }
    out
}

/// Supporting defects for a classification: the Yang-Baxter defect and the
/// invariance defects of the skew part.
fn classification_support_entries(
    alg: &PermAlgebra,
    r: &TwoTensor,
) -> Result<Vec<DefectEntry>> {
    let mut out = Vec::new();
    let yb = pybe_defect(alg, r)?;
    if !yb.is_zero() {
        out.push(DefectEntry::from_three_tensor("pybe", vec![], &yb));
    }
    for (i, d) in rad_invariance_defect(alg, &r.sub(&r.twist()))? {
        out.push(DefectEntry::from_two_tensor("skew-invariance", vec![i], &d));
    }
    Ok(out)
}

fn cmd_check(ctx: &mut Ctx, path: &Path, kind: CheckKind) -> Result<CommandOutput> {
    let doc = ctx.load(path)?;
    let loaded = io::interpret(&doc)?;
    let expected = match kind {
        CheckKind::Perm => "perm",
        CheckKind::Coalgebra => "coalgebra",
        CheckKind::Bialgebra => "bialgebra",
        CheckKind::Representation => "representation",
        CheckKind::Apermalgebra => "apermalgebra",
        CheckKind::Quadratic => "quadratic",
        CheckKind::QuadraticRb => "quadratic-rb",
    };
    if doc.kind_name() != expected {
        return Err(Error::Parse(format!(
            "{}: kind is {:?}, expected {:?}",
            path.display(),
            doc.kind_name(),
            expected
        )));
    }
    let defects = match loaded {
        Loaded::Algebra(a) => algebra_defect_entries(&a),
        Loaded::Coalgebra(c) => coalgebra_defect_entries(&c),
        Loaded::Bialgebra(b) => bialgebra_defect_entries(&b),
        Loaded::Representation(r) => representation_defect_entries(&r),
        Loaded::ApermAlgebra(x) => aperm_defect_entries(&x),
        Loaded::Quadratic(a, f) => quadratic_defect_entries(&quadratic_defects(&a, &f)),
        Loaded::QuadraticRb(d) => quadratic_rb_defect_entries(&quadratic_rb_defects(&d)),
        _ => unreachable!("kinds filtered above"),
    };
    let (report, code) = ctx.report(defects, None, None);
    Ok(CommandOutput::Report(report, code))
}

fn cmd_classify(ctx: &mut Ctx, algebra: &Path, tensor: &Path) -> Result<CommandOutput> {
    let alg = load_algebra(ctx, algebra)?;
    let r = load_tensor(ctx, tensor)?;
    let class = classify(&alg, &r)?;
    let defects = classification_support_entries(&alg, &r)?;
    let (report, code) = ctx.report(defects, Some(class.to_string()), None);
    Ok(CommandOutput::Report(report, code))
}

/// File stem with the `.json` suffix and one trailing kind marker removed.
fn base_name(path: &Path) -> String {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "out".to_string());
    let name = name.strip_suffix(".json").unwrap_or(&name).to_string();
    for suffix in [
        ".perm",
        ".bialgebra",
        ".tensor",
        ".form",
        ".operator",
        ".qrb",
        ".coalgebra",
    ] {
        if let Some(stripped) = name.strip_suffix(suffix) {
            return stripped.to_string();
        }
    }
    name
}

fn cmd_double(ctx: &mut Ctx, bialgebra: &Path, out: &Path) -> Result<CommandOutput> {
    let b = match io::interpret(&ctx.load(bialgebra)?)? {
        Loaded::Bialgebra(b) => b,
        other => {
            return Err(Error::Parse(format!(
                "{}: expected a bialgebra document, found {}",
                bialgebra.display(),
                loaded_kind(&other)
            )))
        }
    };
    let defects = bialgebra_defect_entries(&b);
    if !defects.is_empty() {
        let (report, code) = ctx.report(defects, None, None);
        return Ok(CommandOutput::Report(report, code));
    }
    let double = build_double(&b)?;
    let r = canonical_r(b.dim());
    let class = classify(&double.total, &r)?;
    std::fs::create_dir_all(out)?;
    let stem = base_name(bialgebra);
    let algebra_path = out.join(format!("{stem}.double.perm.json"));
    let tensor_path = out.join(format!("{stem}.double.tensor.json"));
    io::save(&algebra_path, &io::algebra_to_doc(&double.total))?;
    io::save(&tensor_path, &io::tensor_to_doc(&r))?;
    let data = serde_json::json!({
        "algebra_file": algebra_path.display().to_string(),
        "tensor_file": tensor_path.display().to_string(),
    });
    let (report, code) = ctx.report(Vec::new(), Some(class.to_string()), Some(data));
    Ok(CommandOutput::Report(report, code))
}

fn parse_weight(weight: &str) -> Result<Scalar> {
    weight.parse::<Scalar>()
}

fn cmd_rb_to_bialg(
    ctx: &mut Ctx,
    algebra: &Path,
    form: &Path,
    operator: &Path,
    weight: &str,
    out: &Path,
) -> Result<CommandOutput> {
    let alg = load_algebra(ctx, algebra)?;
    let f = match io::interpret(&ctx.load(form)?)? {
        Loaded::Form(f) => f,
        other => {
            return Err(Error::Parse(format!(
                "{}: expected a form document, found {}",
                form.display(),
                loaded_kind(&other)
            )))
        }
    };
    let p = match io::interpret(&ctx.load(operator)?)? {
        Loaded::Operator(p) => p,
        other => {
            return Err(Error::Parse(format!(
                "{}: expected an operator document, found {}",
                operator.display(),
                loaded_kind(&other)
            )))
        }
    };
    let w = parse_weight(weight)?;
    let data = QuadraticRbData::new(alg, f, p, w.clone())?;
    let report = quadratic_rb_defects(&data);
    if !report.is_clean() {
        let (report, code) = ctx.report(quadratic_rb_defect_entries(&report), None, None);
        return Ok(CommandOutput::Report(report, code));
    }
    let r = qrb_to_r(&data)?;
    let class = classify(&data.algebra, &r)?;
    std::fs::create_dir_all(out)?;
    let stem = base_name(algebra);
    let tensor_path = out.join(format!("{stem}.induced-tensor.json"));
    io::save(&tensor_path, &io::tensor_to_doc(&r))?;
    let payload = serde_json::json!({
        "tensor_file": tensor_path.display().to_string(),
        "weight": w.to_string(),
    });
    let (report, code) = ctx.report(Vec::new(), Some(class.to_string()), Some(payload));
    Ok(CommandOutput::Report(report, code))
}

fn cmd_bialg_to_rb(
    ctx: &mut Ctx,
    algebra: &Path,
    tensor: &Path,
    weight: &str,
    out: &Path,
) -> Result<CommandOutput> {
    let alg = load_algebra(ctx, algebra)?;
    let r = load_tensor(ctx, tensor)?;
    let w = parse_weight(weight)?;
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if !is_factorizable(&alg, &r)? {
        let class = classify(&alg, &r)?;
        let mut defects = classification_support_entries(&alg, &r)?;
        if defects.is_empty() {
            // Solves the equation but the skew part is degenerate.
            let skew = r.sub(&r.twist());
            defects.push(DefectEntry {
                family: "skew-rank-deficit".to_string(),
                indices: vec![skew.t_map().rank(), alg.dim()],
                components: Vec::new(),
            });
        }
        let (report, code) = ctx.report(defects, Some(class.to_string()), None);
        return Ok(CommandOutput::Report(report, code.max(1)));
    }
    let data = r_to_qrb(&alg, &r, &w)?;
    std::fs::create_dir_all(out)?;
    let stem = base_name(algebra);
    let form_path = out.join(format!("{stem}.induced-form.json"));
    let operator_path = out.join(format!("{stem}.induced-operator.json"));
    io::save(&form_path, &io::form_to_doc(&data.form))?;
    io::save(&operator_path, &io::operator_to_doc(&data.operator))?;
    let payload = serde_json::json!({
        "form_file": form_path.display().to_string(),
        "operator_file": operator_path.display().to_string(),
        "weight": w.to_string(),
    });
    let (report, code) = ctx.report(Vec::new(), Some("Factorizable".to_string()), Some(payload));
    Ok(CommandOutput::Report(report, code))
}

fn cmd_factorize(
    ctx: &mut Ctx,
    algebra: &Path,
    tensor: &Path,
    element: &str,
) -> Result<CommandOutput> {
    let alg = load_algebra(ctx, algebra)?;
    let r = load_tensor(ctx, tensor)?;
    let x = io::parse_element(element, alg.dim())?;
    match factorize(&alg, &r, &x) {
        Ok((x1, x2)) => {
            let payload = serde_json::json!({
                "x1": x1.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "x2": x2.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            let (report, code) = ctx.report(
                Vec::new(),
                Some("Factorizable".to_string()),
                Some(payload),
            );
            Ok(CommandOutput::Report(report, code))
        }
        Err(Error::NotFactorizable) => {
            let class = classify(&alg, &r)?;
            let defects = classification_support_entries(&alg, &r)?;
            let report = Report::new(
                defects,
                Some(class.to_string()),
                None,
                ctx.start.elapsed().as_millis(),
                ctx.inputs.clone(),
                ctx.quiet,
            );
            Ok(CommandOutput::Report(report, 1))
        }
        Err(e) => Err(e),
    }
}

fn cmd_catalog(ctx: &mut Ctx, action: &CatalogAction) -> Result<CommandOutput> {
    match action {
        CatalogAction::List => {
            let mut lines = Vec::new();
            for entry in catalog::all() {
                let kind = match &entry.payload {
                    catalog::CatalogPayload::Algebra(_) => "perm",
                    catalog::CatalogPayload::Bialgebra(_) => "bialgebra",
                    catalog::CatalogPayload::AlgebraTensor { .. } => "perm+tensor",
                    catalog::CatalogPayload::QuadraticRb(_) => "quadratic-rb",
                };
                lines.push(format!("{}\t{}\t{}", entry.name, kind, entry.provenance));
            }
            Ok(CommandOutput::Lines(lines))
        }
        CatalogAction::Export { name, out } => {
            let entry = catalog::get(name)?;
            std::fs::create_dir_all(out)?;
            let mut files = Vec::new();
            let mut write = |path: PathBuf, doc: &Document| -> Result<()> {
                io::save(&path, doc)?;
                files.push(path.display().to_string());
                Ok(())
            };
            match &entry.payload {
                catalog::CatalogPayload::Algebra(a) => {
                    write(out.join(format!("{name}.perm.json")), &io::algebra_to_doc(a))?;
                }
                catalog::CatalogPayload::Bialgebra(b) => {
                    write(
                        out.join(format!("{name}.bialgebra.json")),
                        &io::bialgebra_to_doc(b),
                    )?;
                }
                catalog::CatalogPayload::AlgebraTensor { algebra, tensor } => {
                    write(
                        out.join(format!("{name}.perm.json")),
                        &io::algebra_to_doc(algebra),
                    )?;
                    write(
                        out.join(format!("{name}.tensor.json")),
                        &io::tensor_to_doc(tensor),
                    )?;
                }
                catalog::CatalogPayload::QuadraticRb(d) => {
                    write(
                        out.join(format!("{name}.qrb.json")),
                        &io::quadratic_rb_to_doc(d),
                    )?;
                    write(
                        out.join(format!("{name}.perm.json")),
                        &io::algebra_to_doc(&d.algebra),
                    )?;
                    write(out.join(format!("{name}.form.json")), &io::form_to_doc(&d.form))?;
                    write(
                        out.join(format!("{name}.operator.json")),
                        &io::operator_to_doc(&d.operator),
                    )?;
                }
            }
            let payload = serde_json::json!({ "files": files });
            let (report, code) = ctx.report(Vec::new(), None, Some(payload));
            Ok(CommandOutput::Report(report, code))
        }
    }
}

/// The coboundary coproduct of a classified tensor, exposed for tests that
/// need the bialgebra a classification implies.
pub fn coboundary_bialgebra(alg: &PermAlgebra, r: &TwoTensor) -> Result<PermBialgebra> {
    let co = coboundary_coproduct(alg, r)?;
    PermBialgebra::new(alg.clone(), co)
}
