//! Command implementations. Each returns the full text for standard output
//! so repeated runs are byte-identical; warnings go to standard error.

use std::fs;
use std::path::{Path, PathBuf};

use anyonic_core::anyspace::{AnySpace, ThetaPoly};
use anyonic_core::constructions::{
    ansatz_warning, build_ansatz, build_matrix_type, check_liesuper_reduction, ConstructionError, MatrixTypeParams,
};
use anyonic_core::envelope::{
    generate_relations, EnvelopeError, Poly, QuadRelation, QuotientSystem, RewriteSystem,
};
use anyonic_core::lie_axioms::{verify_all, AxiomCheck};
use anyonic_core::{AlgebraSpec, Bicharacter, CycNum, Degree, GradingGroup};
use serde_json::{json, Value};
use thiserror::Error;

use crate::expr::{self, Context, ExprError};
use crate::format::{self, cyc_to_wire, grading_from_wire, report_json, spec_to_wire, FormatError, GradingWire};
use crate::search::{self, SearchError, SearchOutcome, SearchSpace};

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// Well-formed input that fails a check: exit code 1.
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

fn input(what: impl std::fmt::Display, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{what}: {e}"))
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Input(format!("expression {e}"))
    }
}

/// Output of a command: text for stdout plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// How `--bicharacter` overrides or constrains the grading.
#[derive(Debug, Clone, PartialEq)]
pub enum BicharacterMode {
    /// Keep whatever the input declares.
    Declared,
    /// Insist on the anyonic braiding of a cyclic group.
    Anyonic,
    /// Colour Lie algebra mode: warn when the bicharacter is not skew.
    Colour,
    /// Replace the grading with one read from a file.
    File(PathBuf),
}

impl BicharacterMode {
    pub fn parse(s: Option<&str>) -> Self {
        match s {
            None => BicharacterMode::Declared,
            Some("anyonic") => BicharacterMode::Anyonic,
            Some("colour" | "color") => BicharacterMode::Colour,
            Some(path) => BicharacterMode::File(PathBuf::from(path)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Global {
    pub json: bool,
    pub order: Option<Vec<String>>,
    pub bicharacter: BicharacterMode,
    pub degree_cap: usize,
    pub force: bool,
}

impl Default for Global {
    fn default() -> Self {
        Global {
            json: false,
            order: None,
            bicharacter: BicharacterMode::Declared,
            degree_cap: 4,
            force: false,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input(path.display(), e))
}

fn format_err(path: &Path, e: FormatError) -> CliError {
    input(path.display(), e)
}

pub fn load_grading(path: &Path) -> Result<Bicharacter, CliError> {
    let text = read(path)?;
    let wire: GradingWire = serde_json::from_str(&text).map_err(|e| input(path.display(), e))?;
    grading_from_wire(&wire, "grading").map_err(|e| format_err(path, e))
}

impl Global {
    fn grading(&self, declared: Bicharacter) -> Result<Bicharacter, CliError> {
        let b = match &self.bicharacter {
            BicharacterMode::File(p) => load_grading(p)?,
            _ => declared,
        };
        match self.bicharacter {
            BicharacterMode::Anyonic if !b.is_anyonic() => Err(CliError::Input(
                "--bicharacter anyonic: grading is not the anyonic braiding of a cyclic group".into(),
            )),
            BicharacterMode::Colour if !b.is_skew() => {
                eprintln!("warning: bicharacter is not skew; colour Lie algebra identities may not apply");
                Ok(b)
            }
            _ => Ok(b),
        }
    }

    fn spec(&self, path: &Path) -> Result<AlgebraSpec, CliError> {
        let text = read(path)?;
        let spec = format::parse_spec(&text).map_err(|e| format_err(path, e))?;
        let grading = self.grading(spec.grading().clone())?;
        if &grading == spec.grading() {
            return Ok(spec);
        }
        AlgebraSpec::new(
            grading,
            spec.basis().to_vec(),
            spec.eps().clone(),
            spec.d().clone(),
            spec.c().clone(),
        )
        .map_err(|e| input("--bicharacter", e))
    }

    fn order(&self, spec: &AlgebraSpec) -> Result<Option<Vec<usize>>, CliError> {
        let Some(items) = &self.order else {
            return Ok(None);
        };
        items
            .iter()
            .map(|s| resolve_index(spec, s))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    fn rewrite_system(&self, spec: &AlgebraSpec) -> Result<(Vec<QuadRelation>, RewriteSystem), CliError> {
        let rels = generate_relations(spec, self.force).map_err(envelope_err)?;
        let order = self.order(spec)?;
        let rs = RewriteSystem::build(&rels, spec.dim(), order.as_deref()).map_err(envelope_err)?;
        Ok((rels, rs))
    }
}

fn envelope_err(e: EnvelopeError) -> CliError {
    match e {
        EnvelopeError::BadOrder | EnvelopeError::IndexOutOfRange { .. } => input("--order", e),
        _ => CliError::Failure(e.to_string()),
    }
}

fn resolve_index(spec: &AlgebraSpec, s: &str) -> Result<usize, CliError> {
    if let Some(i) = spec.basis().iter().position(|b| b.name == s) {
        return Ok(i);
    }
    s.parse::<usize>()
        .ok()
        .filter(|&i| i < spec.dim())
        .ok_or_else(|| CliError::Input(format!("--order: unknown generator {s:?}")))
}

pub fn cyc_json(c: &CycNum) -> String {
    serde_json::to_string(&cyc_to_wire(c)).expect("number serializes")
}

fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn write_or_return(text: String, output: Option<&Path>) -> Result<String, CliError> {
    match output {
        Some(p) => {
            fs::write(p, &text).map_err(|e| input(p.display(), e))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

// ---- verify ----

fn check_lines(out: &mut String, c: &AxiomCheck, names: &[String], label: &str) {
    let verdict = if c.passed() { "PASS" } else { "FAIL" };
    out.push_str(&format!("{verdict} {label}"));
    if !c.passed() {
        out.push_str(&format!(" ({} failures)", c.failures));
    }
    out.push('\n');
    for w in &c.witnesses {
        let idx: Vec<&str> = w.indices.iter().map(|&i| names[i].as_str()).collect();
        out.push_str(&format!("  {} at ({}): lhs = {}, rhs = {}\n", w.law, idx.join(", "), w.lhs, w.rhs));
    }
}

pub fn verify(g: &Global, path: &Path) -> Result<Outcome, CliError> {
    let spec = g.spec(path)?;
    let report = verify_all(&spec);
    let code = if report.passed() { 0 } else { 1 };
    if g.json {
        return Ok(Outcome {
            stdout: emit_json(&report_json(&report)),
            code,
        });
    }
    let names: Vec<String> = spec.basis().iter().map(|b| b.name.clone()).collect();
    let mut out = String::new();
    for c in &report.checks {
        check_lines(&mut out, c, &names, c.axiom.label());
    }
    if let Some(a) = &report.antisymmetry {
        let label = format!("{} (informational)", a.axiom.label());
        check_lines(&mut out, a, &names, &label);
    }
    for n in &report.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out.push_str(if report.passed() {
        "result: anyonic Lie algebra\n"
    } else {
        "result: axioms fail\n"
    });
    Ok(Outcome { stdout: out, code })
}

// ---- make-matrix / make-ansatz ----

/// Parses a comma-separated degree list; coordinates within one degree are
/// separated by `:`.
pub fn parse_degrees(group: &GradingGroup, items: &[String]) -> Result<Vec<Degree>, CliError> {
    items
        .iter()
        .map(|s| {
            let coords = s
                .split(':')
                .map(|c| c.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| input(format!("degree {s:?}"), e))?;
            group.degree(&coords).map_err(|e| input(format!("degree {s:?}"), e))
        })
        .collect()
}

pub struct MatrixArgs<'a> {
    pub size: Option<usize>,
    pub n: Option<u32>,
    pub f: &'a [String],
    pub names: Option<Vec<String>>,
    pub grading: Option<&'a Path>,
    pub output: Option<&'a Path>,
    pub no_verify: bool,
}

fn base_grading(g: &Global, n: Option<u32>, file: Option<&Path>) -> Result<Bicharacter, CliError> {
    let declared = match (file, n) {
        (Some(p), _) => load_grading(p)?,
        (None, Some(n)) => Bicharacter::anyonic(n).map_err(|e| input("--n", e))?,
        (None, None) => match &g.bicharacter {
            BicharacterMode::File(p) => load_grading(p)?,
            _ => return Err(CliError::Input("give --n or --grading".into())),
        },
    };
    g.grading(declared)
}

pub fn make_matrix(g: &Global, a: MatrixArgs<'_>) -> Result<Outcome, CliError> {
    let grading = base_grading(g, a.n, a.grading)?;
    let f = parse_degrees(grading.group(), a.f)?;
    if let Some(size) = a.size {
        if size != f.len() {
            return Err(CliError::Input(format!("--N is {size} but --f has {} entries", f.len())));
        }
    }
    let mut params = MatrixTypeParams::new(grading, f);
    params.names = a.names;
    params.verify = !a.no_verify;
    let spec = build_matrix_type(&params).map_err(|e| match e {
        ConstructionError::NotVerified(_) => CliError::Failure(e.to_string()),
        _ => input("make-matrix", e),
    })?;
    let text = format!("{}\n", format::spec_to_json(&spec));
    Ok(Outcome::ok(write_or_return(text, a.output)?))
}

pub fn make_ansatz(
    g: &Global,
    n: Option<u32>,
    g_file: &Path,
    check: bool,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let text = read(g_file)?;
    let wire: format::GWire = serde_json::from_str(&text).map_err(|e| input(g_file.display(), e))?;
    let default = match (&wire.grading, n) {
        (Some(_), _) => Bicharacter::anyonic(1).expect("trivial group"),
        (None, _) => base_grading(g, n, None)?,
    };
    let mut params = format::parse_g_file(&text, default).map_err(|e| format_err(g_file, e))?;
    params.grading = g.grading(params.grading.clone())?;
    if let Some(w) = ansatz_warning(&params.grading) {
        eprintln!("warning: {w}");
    }
    if !check {
        let spec = build_ansatz(&params).map_err(|e| input("make-ansatz", e))?;
        let text = format!("{}\n", format::spec_to_json(&spec));
        return Ok(Outcome::ok(write_or_return(text, output)?));
    }
    let r = check_liesuper_reduction(&params).map_err(|e| input("make-ansatz", e))?;
    let code = if r.agrees() && r.verify_passes { 0 } else { 1 };
    let stdout = if g.json {
        emit_json(&json!({
            "degree_failures": r.degree_failures,
            "phase_failures": r.first_failures,
            "jacobi_failures": r.second_failures.iter().map(|w| json!({
                "indices": w.indices,
                "lhs": cyc_to_wire(&w.lhs),
                "rhs": cyc_to_wire(&w.rhs),
            })).collect::<Vec<_>>(),
            "reduced_conditions_hold": r.direct_holds(),
            "verify_passes": r.verify_passes,
            "agrees": r.agrees(),
        }))
    } else {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        out.push_str(&format!("bracket degrees respected: {}\n", yes(r.degree_failures.is_empty())));
        out.push_str(&format!("squared phases trivial: {}\n", yes(r.first_holds())));
        out.push_str(&format!("braided Jacobi identity: {}\n", yes(r.second_holds())));
        for w in r.second_failures.iter().take(8) {
            let [a, b, c, d] = w.indices;
            out.push_str(&format!(
                "  at ({}, {}, {}; {}): lhs = {}, rhs = {}\n",
                params.names[a], params.names[b], params.names[c], params.names[d], w.lhs, w.rhs
            ));
        }
        out.push_str(&format!("full axiom check: {}\n", if r.verify_passes { "PASS" } else { "FAIL" }));
        out.push_str(&format!("agreement: {}\n", yes(r.agrees())));
        out
    };
    Ok(Outcome { stdout, code })
}

// ---- env / nf ----

fn cyc_text(c: &CycNum) -> String {
    if c.terms().count() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

fn word_text(names: &[String], w: &[usize]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("·")
}

/// Human form of a polynomial, e.g. `z3·b·c + 2·a`.
pub fn poly_text(names: &[String], p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = p
        .terms()
        .iter()
        .map(|(w, c)| {
            if c.is_one() {
                word_text(names, w)
            } else if w.is_empty() {
                cyc_text(c)
            } else {
                format!("{}·{}", cyc_text(c), word_text(names, w))
            }
        })
        .collect();
    terms.join(" + ")
}

/// Relation-dump form with coefficients as number JSON.
fn poly_dump(names: &[String], p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = p
        .terms()
        .iter()
        .map(|(w, c)| format!("{}·{}", cyc_json(c), word_text(names, w)))
        .collect();
    terms.join(" + ")
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(w, c)| json!({"word": w, "coeff": cyc_to_wire(c)}))
            .collect(),
    )
}

fn rhs_poly(r: &QuadRelation) -> Poly {
    Poly::from_terms(r.rhs.iter().map(|(&(a, b), c)| (vec![a, b], c.clone())))
}

pub fn env(g: &Global, path: &Path) -> Result<Outcome, CliError> {
    let spec = g.spec(path)?;
    let (rels, rs) = g.rewrite_system(&spec)?;
    let names: Vec<String> = spec.basis().iter().map(|b| b.name.clone()).collect();
    let conf = rs.check_local_confluence(g.degree_cap);
    let code = if conf.confluent() { 0 } else { 1 };
    let zero = rs.zero_pairs();
    let nil = rs.nilpotents();
    if g.json {
        let v = json!({
            "generators": names,
            "relations": rels.iter().map(|r| json!({
                "lhs": [r.lhs.0, r.lhs.1],
                "rhs": poly_json(&rhs_poly(r)),
            })).collect::<Vec<_>>(),
            "rules": rs.rules().iter().map(|(&(a, b), p)| json!({
                "lhs": [a, b],
                "rhs": poly_json(p),
            })).collect::<Vec<_>>(),
            "zero_products": zero.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "nilpotents": nil,
            "confluence": {
                "degree_cap": conf.degree_cap,
                "words_checked": conf.words_checked,
                "confluent": conf.confluent(),
                "divergence_count": conf.divergence_count,
                "divergences": conf.divergences.iter().map(|d| json!({
                    "word": d.word,
                    "first": poly_json(&d.first),
                    "second": poly_json(&d.second),
                })).collect::<Vec<_>>(),
            },
        });
        return Ok(Outcome {
            stdout: emit_json(&v),
            code,
        });
    }
    let mut out = String::new();
    out.push_str(&format!("relations ({}):\n", rels.len()));
    for r in &rels {
        out.push_str(&format!(
            "  {} = {}\n",
            word_text(&names, &[r.lhs.0, r.lhs.1]),
            poly_dump(&names, &rhs_poly(r))
        ));
    }
    out.push_str(&format!("rewrite rules ({}):\n", rs.rules().len()));
    for (&(a, b), p) in rs.rules() {
        out.push_str(&format!("  {} -> {}\n", word_text(&names, &[a, b]), poly_text(&names, p)));
    }
    let mut products: Vec<(usize, usize)> = zero.iter().copied().chain(nil.iter().map(|&i| (i, i))).collect();
    products.sort();
    let zero_list: Vec<String> = products.iter().map(|&(a, b)| word_text(&names, &[a, b])).collect();
    out.push_str(&format!("zero products: {}\n", list_or_none(&zero_list)));
    let nil_list: Vec<String> = nil.iter().map(|&i| names[i].clone()).collect();
    out.push_str(&format!("square to zero: {}\n", list_or_none(&nil_list)));
    if conf.confluent() {
        out.push_str(&format!(
            "locally confluent up to degree {} ({} words checked)\n",
            conf.degree_cap, conf.words_checked
        ));
    } else {
        out.push_str(&format!(
            "NOT locally confluent: {} divergences up to degree {}\n",
            conf.divergence_count, conf.degree_cap
        ));
        for d in &conf.divergences {
            out.push_str(&format!(
                "  {}: {}  vs  {}\n",
                word_text(&names, &d.word),
                poly_text(&names, &d.first),
                poly_text(&names, &d.second)
            ));
        }
    }
    Ok(Outcome { stdout: out, code })
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

struct PolyContext<'a> {
    names: &'a [String],
}

impl Context for PolyContext<'_> {
    type Value = Poly;
    fn atom(&self, name: &str) -> Option<Poly> {
        self.names.iter().position(|n| n == name).map(|i| Poly::word(vec![i]))
    }
    fn scalar(&self, c: CycNum) -> Poly {
        Poly::one().scale(&c)
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
}

pub fn nf(g: &Global, path: &Path, src: &str, quotient: Option<&str>) -> Result<Outcome, CliError> {
    let spec = g.spec(path)?;
    let (_, rs) = g.rewrite_system(&spec)?;
    let names: Vec<String> = spec.basis().iter().map(|b| b.name.clone()).collect();
    let ctx = PolyContext { names: &names };
    let p = expr::evaluate(src, &ctx)?;
    let result = match quotient {
        None => rs.normal_form(&p),
        Some(q) => {
            let d = expr::evaluate(q, &ctx)?;
            let qs = QuotientSystem::by_central_element(&rs, &d).map_err(|e| CliError::Failure(e.to_string()))?;
            qs.normal_form(&p)
        }
    };
    let stdout = if g.json {
        emit_json(&json!({"generators": names, "normal_form": poly_json(&result)}))
    } else {
        format!("{}\n", poly_text(&names, &result))
    };
    Ok(Outcome::ok(stdout))
}

// ---- anyspace ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyOp {
    Expand,
    Coproduct,
    Antipode,
    Derivative,
    Integral,
    Counit,
}

struct ThetaContext<'a> {
    space: &'a AnySpace,
    vars: usize,
}

impl ThetaContext<'_> {
    fn var(&self, name: &str) -> Option<usize> {
        if name == "t" && self.vars == 1 {
            return Some(0);
        }
        let i: usize = name.strip_prefix('t')?.parse().ok()?;
        (1..=self.vars).contains(&i).then(|| i - 1)
    }
}

impl Context for ThetaContext<'_> {
    type Value = ThetaPoly;
    fn atom(&self, name: &str) -> Option<ThetaPoly> {
        self.var(name).map(|i| self.space.theta(self.vars, i))
    }
    fn scalar(&self, c: CycNum) -> ThetaPoly {
        self.space.constant(self.vars, c)
    }
    fn add(&self, a: &ThetaPoly, b: &ThetaPoly) -> ThetaPoly {
        a.add(b)
    }
    fn mul(&self, a: &ThetaPoly, b: &ThetaPoly) -> ThetaPoly {
        self.space.mul(a, b)
    }
}

/// Number of anyonic variables an expression uses: 1 for `t`, else the
/// largest `k` among `t1, t2, ...`.
fn variable_count(src: &str) -> Result<usize, CliError> {
    let mut vars = 1;
    for name in expr::names(src)? {
        if let Some(k) = name.strip_prefix('t').and_then(|s| s.parse::<usize>().ok()) {
            if k == 0 {
                return Err(CliError::Input("variables are numbered from t1".into()));
            }
            vars = vars.max(k);
        }
    }
    Ok(vars)
}

fn theta_json(p: &ThetaPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!({"exponents": e, "coeff": cyc_to_wire(c)}))
            .collect(),
    )
}

pub fn anyspace(g: &Global, n: u32, op: AnyOp, src: &str) -> Result<Outcome, CliError> {
    let space = AnySpace::new(n).map_err(|e| input("--n", e))?;
    let vars = variable_count(src)?;
    let p = expr::evaluate(src, &ThetaContext { space: &space, vars })?;
    if op != AnyOp::Expand && vars != 1 {
        return Err(CliError::Input("this operation takes a polynomial in the single variable t".into()));
    }
    enum Res {
        Poly(ThetaPoly),
        Scalar(CycNum),
    }
    let res = match op {
        AnyOp::Expand => Res::Poly(p),
        AnyOp::Coproduct => Res::Poly(space.coproduct(&p)),
        AnyOp::Antipode => Res::Poly(space.antipode(&p)),
        AnyOp::Derivative => Res::Poly(space.derivative(&p)),
        AnyOp::Integral => Res::Scalar(space.integral(&p)),
        AnyOp::Counit => Res::Scalar(space.counit(&p)),
    };
    let stdout = match (&res, g.json) {
        (Res::Poly(p), true) => emit_json(&json!({"vars": p.vars(), "terms": theta_json(p)})),
        (Res::Scalar(c), true) => emit_json(&cyc_to_wire(c).into_json()),
        (Res::Poly(p), false) => {
            let mut out = format!("{p}\n");
            for (e, c) in p.terms() {
                out.push_str(&format!("  {e:?}: {}\n", cyc_json(c)));
            }
            out
        }
        (Res::Scalar(c), false) => format!("{c}\n  {}\n", cyc_json(c)),
    };
    Ok(Outcome::ok(stdout))
}

trait IntoJson {
    fn into_json(self) -> Value;
}

impl IntoJson for format::CycWire {
    fn into_json(self) -> Value {
        serde_json::to_value(self).expect("number serializes")
    }
}

// ---- search ----

struct Numbers;

impl Context for Numbers {
    type Value = CycNum;
    fn atom(&self, _: &str) -> Option<CycNum> {
        None
    }
    fn scalar(&self, c: CycNum) -> CycNum {
        c
    }
    fn add(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a + b
    }
    fn mul(&self, a: &CycNum, b: &CycNum) -> CycNum {
        a * b
    }
}

/// Parses alphabet entries such as `0`, `-1`, `1/2`, `z3^2`.
pub fn parse_alphabet(items: &[String]) -> Result<Vec<CycNum>, CliError> {
    let mut out: Vec<CycNum> = Vec::new();
    for s in items {
        let v = expr::evaluate(s, &Numbers)?;
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

pub struct SearchArgs<'a> {
    pub dim: usize,
    pub n: Option<u32>,
    pub grading: Option<&'a Path>,
    pub degrees: Option<&'a [String]>,
    pub alphabet: Option<&'a [String]>,
    pub nonzero_delta: bool,
    pub nonzero_degree: bool,
    pub no_prune: bool,
    pub cap: u128,
    pub threads: Option<usize>,
}

pub fn search(g: &Global, a: SearchArgs<'_>) -> Result<Outcome, CliError> {
    let grading = base_grading(g, a.n.or(Some(1)).filter(|_| a.grading.is_none()), a.grading)?;
    let degrees = a.degrees.map(|d| parse_degrees(grading.group(), d)).transpose()?;
    let alphabet = match a.alphabet {
        Some(items) => parse_alphabet(items)?,
        None => search::default_alphabet(grading.group().exponent()),
    };
    let space = SearchSpace {
        grading,
        dim: a.dim,
        degrees,
        alphabet,
        require_nonzero_delta: a.nonzero_delta,
        require_nonzero_degree: a.nonzero_degree,
        prune: !a.no_prune,
    };
    let outcome = match a.threads {
        Some(1) => search::run(&space, a.cap, false),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| input("--threads", e))?
            .install(|| search::run(&space, a.cap, true)),
        None => search::run(&space, a.cap, true),
    }
    .map_err(|e| match e {
        SearchError::CapExceeded { .. } => CliError::Input(e.to_string()),
        _ => input("search", e),
    })?;
    Ok(Outcome::ok(search_output(g, &outcome)))
}

fn search_output(g: &Global, o: &SearchOutcome) -> String {
    let big = |x: u128| u64::try_from(x).unwrap_or(u64::MAX);
    if g.json {
        return emit_json(&json!({
            "raw_candidates": big(o.raw_count),
            "candidates": big(o.candidates),
            "solution_count": o.solutions.len(),
            "solutions": o.solutions.iter().map(|s| spec_to_wire(&s.spec)).collect::<Vec<_>>(),
        }));
    }
    let mut out = format!(
        "candidates: {} ({} before grading pruning)\n",
        o.candidates, o.raw_count
    );
    for (i, s) in o.solutions.iter().enumerate() {
        let line = serde_json::to_string(&spec_to_wire(&s.spec)).expect("spec serializes");
        out.push_str(&format!("solution {}: {line}\n", i + 1));
    }
    out.push_str(&format!(
        "solutions: {} (not reduced modulo basis rescaling or permutation)\n",
        o.solutions.len()
    ));
    out
}
