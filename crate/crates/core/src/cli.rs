//! Command implementations for the `poincare-kit` binary.
//!
//! Every command produces an [`OutputRecord`]: the normalized command line,
//! a SHA-256 digest of the inputs, a result tree, an optional table and the
//! invariant residuals relevant to the command. Numbers are printed with 17
//! significant digits in every output format.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain error (including
//! a residual above the tolerance).

use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::desitter::{self, BridgePoint, BridgeRow};
use crate::matrix::{Complex, ComplexMat2};
use crate::polarization::{self, CoherencyMatrix, SampledSignal};
use crate::sl2c::{FourVector, GeneratorKind, GroupElement, Mat4R};
use crate::wigner::{self, LittleKind};
use crate::{tol, Error};

/// Environment variable overriding the default residual tolerance.
pub const TOLERANCE_ENV: &str = "POINCARE_KIT_TOL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("pipeline parse error at position {position}: {msg}")]
    Parse { position: usize, msg: String },
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Parse { .. } | Self::Io { .. } => 1,
            Self::Domain(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "poincare-kit",
    version,
    about = "Lorentz-group, polarization and mass-angle numerics"
)]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Read angle arguments in degrees (output stays in radians).
    #[arg(long, global = true)]
    pub degrees: bool,
    /// Relative residual tolerance (default 1e-9, or $POINCARE_KIT_TOL).
    #[arg(long, global = true, value_name = "REL")]
    pub tolerance: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVar {
    Chi,
    Sigma,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose a generator pipeline and apply it to a four-vector.
    Transform {
        /// Comma-separated `kind:param` tokens, applied left to right.
        #[arg(long, short, allow_hyphen_values = true)]
        pipeline: String,
        /// Four-vector `t,z,x,y`.
        #[arg(long, short, allow_hyphen_values = true, value_parser = parse_four_vector)]
        vector: FourVector,
    },
    /// Classify a four-momentum and build its little group.
    LittleGroup {
        /// Four-momentum `E,pz,px,py`.
        #[arg(long, short, allow_hyphen_values = true, value_parser = parse_four_vector)]
        momentum: FourVector,
        /// Little-group element to test: `phase:φ`, `rot:θ` or `gauge:γ`.
        #[arg(long, allow_hyphen_values = true)]
        probe: Option<String>,
    },
    /// Coherency matrix, Stokes vector and Poincaré-sphere radius.
    #[command(allow_negative_numbers = true)]
    #[command(group(ArgGroup::new("source").required(true).args(["a", "samples"])))]
    Stokes {
        #[arg(long, requires_all = ["phi", "sigma"])]
        a: Option<f64>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        phi: Option<f64>,
        #[arg(long, requires = "a")]
        sigma: Option<f64>,
        /// CSV file with header `t,re1,im1,re2,im2`.
        #[arg(long)]
        samples: Option<PathBuf>,
    },
    /// Fixed-momentum sweep relating decoherence σ and mass angle χ.
    #[command(allow_negative_numbers = true)]
    Bridge {
        #[arg(long)]
        m: f64,
        #[arg(long)]
        p: f64,
        #[arg(long, value_enum, default_value = "chi")]
        sweep: SweepVar,
        #[arg(long)]
        n: usize,
        /// Start of the swept range (default 0).
        #[arg(long)]
        from: Option<f64>,
        /// End of the swept range (default π/2 for χ, the achievable bound for σ).
        #[arg(long)]
        to: Option<f64>,
    },
    /// Mass-shell energies over a momentum grid for several masses.
    #[command(allow_negative_numbers = true)]
    Hyperbola {
        #[arg(long, value_delimiter = ',', required = true)]
        masses: Vec<f64>,
        /// Momentum range `lo,hi`.
        #[arg(long)]
        p_range: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A result tree node.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(u64),
    Str(String),
    List(Vec<Value>),
    Obj(Vec<(String, Value)>),
}

fn obj<const N: usize>(fields: [(&str, Value); N]) -> Value {
    Value::Obj(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    )
}

fn num(x: f64) -> Value {
    Value::Num(x)
}

fn four(v: &FourVector) -> Value {
    obj([
        ("t", num(v.t)),
        ("z", num(v.z)),
        ("x", num(v.x)),
        ("y", num(v.y)),
    ])
}

fn complex(c: Complex) -> Value {
    obj([("re", num(c.re)), ("im", num(c.im))])
}

fn mat2(m: &ComplexMat2) -> Value {
    obj([
        ("e00", complex(m.e00)),
        ("e01", complex(m.e01)),
        ("e10", complex(m.e10)),
        ("e11", complex(m.e11)),
    ])
}

fn mat4(m: &Mat4R) -> Value {
    Value::List(
        m.0.iter()
            .map(|r| Value::List(r.iter().map(|&x| num(x)).collect()))
            .collect(),
    )
}

fn provenance(g: &GroupElement) -> Value {
    match g.provenance() {
        Some(f) => Value::List(
            f.iter()
                .map(|&(k, p)| obj([("kind", Value::Str(k.name().into())), ("param", num(p))]))
                .collect(),
        ),
        None => Value::Str("unknown".into()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub cells: Vec<Option<f64>>,
    pub status: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub input_digest: String,
    pub result: Vec<(String, Value)>,
    pub table: Option<Table>,
    pub residuals: Vec<Residual>,
}

impl OutputRecord {
    fn new(command: String, extra_input: &[u8]) -> Self {
        let mut h = Sha256::new();
        h.update(command.as_bytes());
        h.update(extra_input);
        Self {
            input_digest: format!("{:x}", h.finalize()),
            command,
            result: Vec::new(),
            table: None,
            residuals: Vec::new(),
        }
    }

    fn put(&mut self, key: &str, v: Value) {
        self.result.push((key.to_string(), v));
    }

    fn residual(&mut self, name: &'static str, value: f64) {
        self.residuals.push(Residual { name, value });
    }

    /// Residuals above `tol` (NaN counts as a failure).
    pub fn violations(&self, tol: f64) -> Vec<&Residual> {
        self.residuals
            .iter()
            .filter(|r| r.value.is_nan() || r.value > tol)
            .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_json(&self) -> String {
        let mut s = String::from("{");
        write!(
            s,
            "\"command\":{},\"input_digest\":{}",
            json_str(&self.command),
            json_str(&self.input_digest)
        )
        .unwrap();
        s.push_str(",\"result\":");
        write_json(&mut s, &Value::Obj(self.result.clone()));
        if let Some(t) = &self.table {
            s.push_str(",\"rows\":[");
            for (i, row) in t.rows.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push('{');
                for (j, (col, cell)) in t.columns.iter().zip(&row.cells).enumerate() {
                    if j > 0 {
                        s.push(',');
                    }
                    write!(s, "{}:", json_str(col)).unwrap();
                    match cell {
                        Some(x) => s.push_str(&json_num(*x)),
                        None => s.push_str("null"),
                    }
                }
                if let Some(st) = row.status {
                    write!(s, ",\"status\":{}", json_str(st)).unwrap();
                }
                s.push('}');
            }
            s.push(']');
        }
        s.push_str(",\"residuals\":{");
        for (i, r) in self.residuals.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{}:{}", json_str(r.name), json_num(r.value)).unwrap();
        }
        s.push_str("}}\n");
        s
    }

    /// Tables print as the bare table; other records as `key,value` pairs.
    fn render_csv(&self) -> String {
        if let Some(t) = &self.table {
            return render_table_csv(t);
        }
        let mut s = String::from("key,value\n");
        for (k, v) in self.flat() {
            writeln!(s, "{k},{v}").unwrap();
        }
        s
    }

    fn render_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.flat() {
            writeln!(s, "{k}: {v}").unwrap();
        }
        if let Some(t) = &self.table {
            s.push_str(&render_table_csv(t));
        }
        s
    }

    fn flat(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("command".to_string(), self.command.clone()),
            ("input_digest".to_string(), self.input_digest.clone()),
        ];
        flatten("result", &Value::Obj(self.result.clone()), &mut out);
        for r in &self.residuals {
            out.push((format!("residual.{}", r.name), fmt_num(r.value)));
        }
        out
    }

    /// Summary lines for stderr when the main output is a bare table.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "# command: {}\n# input_digest: {}\n",
            self.command, self.input_digest
        );
        for r in &self.residuals {
            writeln!(s, "# residual.{}: {}", r.name, fmt_num(r.value)).unwrap();
        }
        s
    }
}

fn render_table_csv(t: &Table) -> String {
    let mut s = t.columns.join(",");
    s.push('\n');
    for row in &t.rows {
        let cells: Vec<String> = row
            .cells
            .iter()
            .map(|c| c.map(fmt_num).unwrap_or_default())
            .collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Obj(fields) => {
            for (k, v) in fields {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::List(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        Value::Num(x) => out.push((prefix.to_string(), fmt_num(*x))),
        Value::Int(i) => out.push((prefix.to_string(), i.to_string())),
        Value::Str(s) => out.push((prefix.to_string(), s.clone())),
    }
}

/// 17 significant digits, scientific notation.
pub fn fmt_num(x: f64) -> String {
    if x.is_finite() {
        // fold -0 into 0
        format!("{:.16e}", x + 0.0)
    } else {
        x.to_string()
    }
}

fn json_num(x: f64) -> String {
    if x.is_finite() {
        fmt_num(x)
    } else {
        "null".into()
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization")
}

fn write_json(s: &mut String, v: &Value) {
    match v {
        Value::Num(x) => s.push_str(&json_num(*x)),
        Value::Int(i) => s.push_str(&i.to_string()),
        Value::Str(t) => s.push_str(&json_str(t)),
        Value::List(items) => {
            s.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                write_json(s, item);
            }
            s.push(']');
        }
        Value::Obj(fields) => {
            s.push('{');
            for (i, (k, item)) in fields.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&json_str(k));
                s.push(':');
                write_json(s, item);
            }
            s.push('}');
        }
    }
}

pub fn parse_four_vector(s: &str) -> Result<FourVector, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected 4 comma-separated components, got {}",
            parts.len()
        ));
    }
    let mut v = [0.0_f64; 4];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| format!("not a number: `{p}`"))?;
        if !slot.is_finite() {
            return Err(format!("non-finite component `{p}`"));
        }
    }
    Ok(FourVector::from_array(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    PhaseZ,
    RotY,
    BoostZ,
    PhaseShift,
    Attenuation,
    Rotation,
}

impl ElementKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s.to_ascii_lowercase().as_str() {
            "phase" | "phasez" => Self::PhaseZ,
            "rot" | "roty" => Self::RotY,
            "boost" | "boostz" => Self::BoostZ,
            "shift" | "phaseshift" => Self::PhaseShift,
            "atten" | "attenuation" => Self::Attenuation,
            "rotation" => Self::Rotation,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::PhaseZ => "phase",
            Self::RotY => "rot",
            Self::BoostZ => "boost",
            Self::PhaseShift => "shift",
            Self::Attenuation => "atten",
            Self::Rotation => "rotation",
        }
    }

    pub fn generator(self) -> GeneratorKind {
        match self {
            Self::PhaseZ | Self::PhaseShift => GeneratorKind::PhaseZ,
            Self::RotY | Self::Rotation => GeneratorKind::RotY,
            Self::BoostZ | Self::Attenuation => GeneratorKind::BoostZ,
        }
    }

    pub fn is_angle(self) -> bool {
        !matches!(self, Self::BoostZ | Self::Attenuation)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementSpec {
    pub kind: ElementKind,
    pub param: f64,
}

/// Nonempty ordered list of elements; the first element acts first.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineSpec {
    pub elements: Vec<ElementSpec>,
}

impl PipelineSpec {
    /// Parses `kind:param[,kind:param…]`. Angles are converted from degrees
    /// when `degrees` is set. Error positions are 1-based character offsets.
    pub fn parse(s: &str, degrees: bool) -> Result<Self, CliError> {
        if s.trim().is_empty() {
            return Err(CliError::Usage("empty pipeline".into()));
        }
        let mut elements = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            let position = offset + 1 + (token.len() - token.trim_start().len());
            offset += token.len() + 1;
            let token = token.trim();
            let (kind, param) = token.split_once(':').ok_or_else(|| CliError::Parse {
                position,
                msg: format!("expected `kind:param`, got `{token}`"),
            })?;
            let kind = ElementKind::parse(kind.trim()).ok_or_else(|| CliError::Parse {
                position,
                msg: format!("unknown element kind `{}`", kind.trim()),
            })?;
            let mut param: f64 = param.trim().parse().map_err(|_| CliError::Parse {
                position,
                msg: format!("bad parameter `{}`", param.trim()),
            })?;
            if !param.is_finite() {
                return Err(CliError::Parse {
                    position,
                    msg: "non-finite parameter".into(),
                });
            }
            if degrees && kind.is_angle() {
                param = param.to_radians();
            }
            elements.push(ElementSpec { kind, param });
        }
        Ok(Self { elements })
    }

    /// `G = G_n ⋯ G_2 G_1`.
    pub fn group_element(&self) -> Result<GroupElement, Error> {
        self.elements
            .iter()
            .try_fold(GroupElement::identity(), |acc, e| {
                GroupElement::generator(e.kind.generator(), e.param)?.compose(&acc)
            })
    }

    fn canonical(&self) -> String {
        self.elements
            .iter()
            .map(|e| format!("{}:{}", e.kind.name(), fmt_num(e.param)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_probe(s: &str, degrees: bool) -> Result<LittleKind, CliError> {
    let (kind, param) = s.split_once(':').ok_or_else(|| CliError::Parse {
        position: 1,
        msg: format!("expected `kind:param`, got `{s}`"),
    })?;
    let position = kind.len() + 2;
    let value: f64 = param.trim().parse().map_err(|_| CliError::Parse {
        position,
        msg: format!("bad parameter `{param}`"),
    })?;
    if !value.is_finite() {
        return Err(CliError::Parse {
            position,
            msg: "non-finite parameter".into(),
        });
    }
    let angle = if degrees { value.to_radians() } else { value };
    match kind.trim().to_ascii_lowercase().as_str() {
        "phase" | "phasez" | "zphase" => Ok(LittleKind::ZPhase(angle)),
        "rot" | "roty" | "yrotation" => Ok(LittleKind::YRotation(angle)),
        "gauge" | "triangular" => Ok(LittleKind::GaugeTriangular(value)),
        other => Err(CliError::Parse {
            position: 1,
            msg: format!("unknown probe kind `{other}`"),
        }),
    }
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff.abs() / scale.abs().max(1.0)
}

pub fn cmd_transform(pipeline: &PipelineSpec, v: &FourVector) -> Result<OutputRecord, CliError> {
    let mut rec = OutputRecord::new(
        format!(
            "transform --pipeline {} --vector {}",
            pipeline.canonical(),
            fmt_vec(v)
        ),
        &[],
    );
    let g = pipeline.group_element()?;
    let out = g.act(v)?;
    let lambda = g.covering_map();
    rec.put("input", four(v));
    rec.put("output", four(&out));
    rec.put("matrix", mat2(g.matrix()));
    rec.put("factors", provenance(&g));
    rec.put("lorentz", mat4(&lambda));
    rec.put("interval", num(v.interval()));
    rec.residual("interval", rel(out.interval() - v.interval(), v.interval()));
    rec.residual(
        "determinant",
        (g.matrix().det() - Complex::new(1.0, 0.0)).norm(),
    );
    let lam_v = lambda.apply(v);
    rec.residual(
        "covering_action",
        rel(lam_v.max_abs_diff(&out), out.max_abs()),
    );
    let scale = lambda.0.iter().flatten().map(|x| x * x).sum::<f64>();
    rec.residual("metric", lambda.metric_residual() / scale.max(1.0));
    Ok(rec)
}

pub fn cmd_little_group(
    p: &FourVector,
    probe: Option<LittleKind>,
) -> Result<OutputRecord, CliError> {
    let mut command = format!("little-group --momentum {}", fmt_vec(p));
    if let Some(k) = probe {
        write!(command, " --probe {}:{}", k.name(), fmt_num(k.param())).unwrap();
    }
    let mut rec = OutputRecord::new(command, &[]);
    let class = wigner::classify(p)?;
    rec.put("class", Value::Str(class.tag.name().into()));
    rec.put("mass_squared", num(class.mass_squared));
    let (standard, g) = wigner::canonical_form(p)?;
    rec.put("standard", four(&standard));
    rec.put("canonicalizing", mat2(g.matrix()));
    rec.put("factors", provenance(&g));
    let back = g.act(&standard)?;
    rec.residual(
        "canonical_round_trip",
        rel(back.max_abs_diff(p), p.max_abs()),
    );
    if let Some(kind) = probe {
        let lg = wigner::little_group_generator(&class, kind)?;
        rec.put(
            "probe",
            obj([
                ("kind", Value::Str(kind.name().into())),
                ("param", num(kind.param())),
            ]),
        );
        rec.put("probe_matrix", mat2(lg.element.matrix()));
        rec.residual("wigner_standard", lg.residual);
        let moved = wigner::conjugate(&g, &lg.element)?;
        let scale = p.to_matrix()?.max_norm();
        rec.residual(
            "wigner_momentum",
            rel(wigner::verify_little_group(&moved, p), scale),
        );
    }
    Ok(rec)
}

#[derive(Debug, Clone, PartialEq)]
pub enum StokesInput {
    Params { a: f64, phi: f64, sigma: f64 },
    Samples { path: PathBuf, bytes: Vec<u8> },
}

pub fn cmd_stokes(input: &StokesInput) -> Result<OutputRecord, CliError> {
    let (mut rec, coh, law) = match input {
        StokesInput::Params { a, phi, sigma } => {
            let rec = OutputRecord::new(
                format!(
                    "stokes --a {} --phi {} --sigma {}",
                    fmt_num(*a),
                    fmt_num(*phi),
                    fmt_num(*sigma)
                ),
                &[],
            );
            (
                rec,
                polarization::coherency_closed_form(*a, *phi, *sigma)?,
                Some((*a, *sigma)),
            )
        }
        StokesInput::Samples { path, bytes } => {
            let rec = OutputRecord::new(format!("stokes --samples {}", path.display()), bytes);
            let sig = SampledSignal::from_csv(bytes.as_slice())?;
            let coh = polarization::coherency_from_samples(&sig)?;
            let mut rec = rec;
            rec.put("samples", Value::Int(sig.samples().len() as u64));
            rec.put("dt", num(sig.dt()));
            rec.put("window", num(sig.window()));
            (rec, coh, None)
        }
    };
    stokes_body(&mut rec, &coh, law)?;
    Ok(rec)
}

fn stokes_body(
    rec: &mut OutputRecord,
    coh: &CoherencyMatrix,
    law: Option<(f64, f64)>,
) -> Result<(), CliError> {
    let (lp, lm) = polarization::diagonalize_coherency(coh);
    let s = polarization::stokes_from_coherency(coh);
    let radius = polarization::poincare_radius(&s);
    rec.put("coherency", mat2(coh.matrix()));
    rec.put("determinant", num(coh.det()));
    rec.put("eigenvalues", Value::List(vec![num(lp), num(lm)]));
    rec.put(
        "stokes",
        obj([
            ("s0", num(s.s0)),
            ("s3", num(s.s3)),
            ("s1", num(s.s1)),
            ("s2", num(s.s2)),
        ]),
    );
    rec.put("radius", num(radius));
    rec.put(
        "degree_of_coherence",
        num(polarization::degree_of_coherence(coh)?),
    );

    let i2 = coh.intensity() * coh.intensity();
    // S0² − |S|² = 2 det C
    rec.residual(
        "stokes_quadratic",
        rel(s.as_four_vector().interval() - 2.0 * coh.det(), i2),
    );
    let back = polarization::coherency_from_stokes(&s)?;
    rec.residual(
        "stokes_round_trip",
        rel(back.matrix().distance(coh.matrix()), coh.intensity()),
    );
    if let Some((a, sigma)) = law {
        let a4 = a.powi(4);
        let expected_det = a4 * -(-2.0 * sigma).exp_m1();
        rec.residual("determinant_law", rel(coh.det() - expected_det, a4));
        rec.residual("radius_law", rel(radius - s.s0 * (-sigma).exp(), s.s0));
    }
    Ok(())
}

pub fn cmd_bridge(
    m: f64,
    p: f64,
    sweep: SweepVar,
    n: usize,
    range: (Option<f64>, Option<f64>),
    degrees: bool,
) -> Result<OutputRecord, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::Domain {
            what: "m",
            value: m,
            range: "(0, ∞)",
        }
        .into());
    }
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::ZeroMomentum.into());
    }
    let to_rad = |x: f64| if degrees { x.to_radians() } else { x };
    let points: Vec<BridgePoint> = match sweep {
        SweepVar::Chi => {
            let lo = range.0.map(to_rad).unwrap_or(0.0);
            let hi = range.1.map(to_rad).unwrap_or(FRAC_PI_2);
            desitter::sweep_chi(m, p, (lo, hi), n)?
                .into_iter()
                .map(BridgePoint::Row)
                .collect()
        }
        SweepVar::Sigma => {
            let lo = range.0.unwrap_or(0.0);
            let hi = match range.1 {
                Some(v) => v,
                None => desitter::sigma_bound(m, p)?,
            };
            desitter::sweep_sigma(m, p, (lo, hi), n)?
        }
    };
    let (lo, hi) = points
        .first()
        .zip(points.last())
        .map(|(a, b)| (sweep_value(a, sweep), sweep_value(b, sweep)))
        .unwrap_or_default();
    let mut rec = OutputRecord::new(
        format!(
            "bridge --m {} --p {} --sweep {} --n {n} --from {} --to {}",
            fmt_num(m),
            fmt_num(p),
            if sweep == SweepVar::Chi {
                "chi"
            } else {
                "sigma"
            },
            fmt_num(lo),
            fmt_num(hi)
        ),
        &[],
    );
    let invariant = m * m + 2.0 * p * p;
    let mut worst = 0.0_f64;
    let mut flagged = 0u64;
    let rows = points
        .iter()
        .map(|pt| match pt {
            BridgePoint::Row(r) => {
                worst = worst.max(r.residual / invariant);
                TableRow {
                    cells: bridge_cells(r),
                    status: None,
                }
            }
            BridgePoint::OutOfRange { sigma, .. } => {
                flagged += 1;
                TableRow {
                    cells: vec![None, Some(*sigma), None, None, None, None, None],
                    status: Some("out_of_range"),
                }
            }
        })
        .collect();
    rec.put("m", num(m));
    rec.put("p", num(p));
    rec.put("sigma_bound", num(desitter::sigma_bound(m, p)?));
    rec.put("out_of_range_rows", Value::Int(flagged));
    rec.table = Some(Table {
        columns: vec!["chi", "sigma", "e1", "e2", "m1", "m2", "residual"],
        rows,
    });
    rec.residual("energy_invariant", worst);
    Ok(rec)
}

fn sweep_value(pt: &BridgePoint, sweep: SweepVar) -> f64 {
    match (pt, sweep) {
        (BridgePoint::Row(r), SweepVar::Chi) => r.chi,
        (BridgePoint::Row(r), SweepVar::Sigma) => r.sigma,
        (BridgePoint::OutOfRange { sigma, .. }, _) => *sigma,
    }
}

fn bridge_cells(r: &BridgeRow) -> Vec<Option<f64>> {
    [r.chi, r.sigma, r.e1, r.e2, r.m1, r.m2, r.residual]
        .into_iter()
        .map(Some)
        .collect()
}

pub fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || CliError::Usage(format!("expected `lo,hi`, got `{s}`"));
    match parts.as_slice() {
        [lo, hi] => Ok((
            lo.parse().map_err(|_| bad())?,
            hi.parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

pub fn cmd_hyperbola(
    masses: &[f64],
    p_range: (f64, f64),
    n: usize,
) -> Result<OutputRecord, CliError> {
    if masses.is_empty() {
        return Err(CliError::Usage("empty mass list".into()));
    }
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    let rows = desitter::hyperbola_sweep(masses, p_range, n)?;
    let mlist: Vec<String> = masses.iter().map(|&m| fmt_num(m)).collect();
    let mut rec = OutputRecord::new(
        format!(
            "hyperbola --masses {} --p-range {},{} --n {n}",
            mlist.join(","),
            fmt_num(p_range.0),
            fmt_num(p_range.1)
        ),
        &[],
    );
    let shell = rows
        .iter()
        .map(|r| rel(r.e * r.e - r.p * r.p - r.m * r.m, r.e * r.e))
        .fold(0.0, f64::max);
    // E must strictly increase with m at every fixed p
    let mut sorted: Vec<_> = rows.clone();
    sorted.sort_by(|a, b| a.p.total_cmp(&b.p).then(a.m.total_cmp(&b.m)));
    let monotone = sorted
        .windows(2)
        .filter(|w| w[0].p == w[1].p && w[0].m < w[1].m)
        .all(|w| w[1].e > w[0].e);
    rec.put("monotone_in_mass", Value::Str(monotone.to_string()));
    rec.table = Some(Table {
        columns: vec!["m", "p", "e"],
        rows: rows
            .iter()
            .map(|r| TableRow {
                cells: vec![Some(r.m), Some(r.p), Some(r.e)],
                status: None,
            })
            .collect(),
    });
    rec.residual("mass_shell", shell);
    rec.residual("monotonicity", if monotone { 0.0 } else { 1.0 });
    Ok(rec)
}

fn fmt_vec(v: &FourVector) -> String {
    v.to_array()
        .iter()
        .map(|&x| fmt_num(x))
        .collect::<Vec<_>>()
        .join(",")
}

fn resolve_tolerance(flag: Option<f64>, env: Option<&str>) -> Result<f64, CliError> {
    let t = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{TOLERANCE_ENV}: not a number: `{s}`")))?,
        (None, None) => tol::CLI_DEFAULT,
    };
    if !(t.is_finite() && t > 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {t}"
        )));
    }
    Ok(t)
}

fn execute(cli: &Cli) -> Result<OutputRecord, CliError> {
    match &cli.command {
        Command::Transform { pipeline, vector } => {
            cmd_transform(&PipelineSpec::parse(pipeline, cli.degrees)?, vector)
        }
        Command::LittleGroup { momentum, probe } => {
            let probe = probe
                .as_deref()
                .map(|s| parse_probe(s, cli.degrees))
                .transpose()?;
            cmd_little_group(momentum, probe)
        }
        Command::Stokes {
            a,
            phi,
            sigma,
            samples,
        } => {
            let input = match (a, phi, sigma, samples) {
                (Some(a), Some(phi), Some(sigma), None) => StokesInput::Params {
                    a: *a,
                    phi: if cli.degrees { phi.to_radians() } else { *phi },
                    sigma: *sigma,
                },
                (None, None, None, Some(path)) => {
                    let bytes = std::fs::read(path).map_err(|e| CliError::Io {
                        path: path.display().to_string(),
                        msg: e.to_string(),
                    })?;
                    StokesInput::Samples {
                        path: path.clone(),
                        bytes,
                    }
                }
                _ => {
                    return Err(CliError::Usage(
                        "give either --a/--phi/--sigma or --samples".into(),
                    ))
                }
            };
            cmd_stokes(&input)
        }
        Command::Bridge {
            m,
            p,
            sweep,
            n,
            from,
            to,
        } => cmd_bridge(*m, *p, *sweep, *n, (*from, *to), cli.degrees),
        Command::Hyperbola { masses, p_range, n } => {
            cmd_hyperbola(masses, parse_range(p_range)?, *n)
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the record. Returns the process exit code.
pub fn run<I, T>(
    args: I,
    env_tolerance: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let tolerance = match resolve_tolerance(cli.tolerance, env_tolerance) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv
        || matches!(
            cli.command,
            Command::Bridge { .. } | Command::Hyperbola { .. }
        )
    {
        // tables default to CSV
        Format::Csv
    } else {
        Format::Text
    };
    match execute(&cli) {
        Ok(rec) => {
            let _ = out.write_all(rec.render(format).as_bytes());
            if format == Format::Csv && rec.table.is_some() {
                let _ = err.write_all(rec.summary().as_bytes());
            }
            let bad = rec.violations(tolerance);
            if bad.is_empty() {
                0
            } else {
                for r in bad {
                    let _ = writeln!(
                        err,
                        "error: residual {} = {} exceeds tolerance {}",
                        r.name,
                        fmt_num(r.value),
                        fmt_num(tolerance)
                    );
                }
                2
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
