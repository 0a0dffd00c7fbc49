//! Command-line front end: reads a hypergraph (and optionally a list
//! assignment) from JSON, runs one subcommand and renders the report.
//!
//! Exit codes: 0 when every check passes, 1 when a certificate or identity
//! fails, 2 for usage, input and regime errors, 3 when a budget is exceeded.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hyperchrom::bounds::{
    certify_cor31, certify_len0, certify_prn1, certify_th41, check_sandwich_all,
    difference_expansion, exact_difference, f_eta, pp15_from_table, threshold_bounds,
    FactorTable, DEFAULT_SAMPLES,
};
use hyperchrom::deltacycles::{chromatic_polynomial_from_family, check_wanghyc_family};
use hyperchrom::listcolor::{alpha_profile, count_l_colorings_from_family, thresholds};
use hyperchrom::{
    chromatic_polynomial_ie, count_l_colorings, count_proper_colorings, plmin_exact, Assignment,
    Budget, CertificateReport, Check, EdgeSet, Error, Eta, Hypergraph, NbFamily, Rational,
    Subject,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "hyperchrom",
    version,
    about = "Exact chromatic polynomials, list-colour counts and list-colouring certificates for hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Hypergraph JSON: {"n": 4, "edges": [[0,1,2],[0,1,3]]}
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// k-assignment JSON: {"k": 2, "lists": [[1,2],[1,2],[1,3],[1,4]]}
    #[arg(long, global = true)]
    pub assignment: Option<PathBuf>,

    #[arg(long, global = true)]
    pub k: Option<u64>,

    #[arg(long, global = true)]
    pub kmax: Option<u64>,

    /// Edge ordering as comma-separated ranks, one per edge (default: input order)
    #[arg(long, global = true)]
    pub eta: Option<String>,

    /// Seed for ChaCha8 (rand_chacha), used by sampled assignments
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,

    /// Largest number of edge subsets (2^m) an enumeration may visit
    #[arg(long, global = true)]
    pub budget_subsets: Option<u64>,

    /// Largest number of colour maps (k^n) an enumeration may visit
    #[arg(long, global = true)]
    pub budget_colorings: Option<u64>,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Cor31,
    Len0,
    Prn1,
    Th41,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate the input
    Validate,
    /// Uniformity, gamma, rho and the E_(r-1) table
    Stats,
    /// P(H,k) by inclusion-exclusion and by the broken-cycle expansion
    Chromatic,
    /// Delta-cycles and broken delta-cycles under the ordering
    DeltaCycles,
    /// Edge sets containing no broken delta-cycle
    Nbc,
    /// P(H,L) by enumeration and by expansion
    ListCount,
    /// Exact P_l(H,k) at --k, or the observed thresholds up to --kmax
    Plmin,
    /// Upper bounds on the list-colouring threshold
    Thresholds,
    /// The per-edge factor F(H,e,k)
    Feval {
        #[arg(long)]
        edge: usize,
    },
    /// Run one certificate at --k
    Certify {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Every cross-check on one instance at --k
    VerifyAll,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

struct Report {
    passed: bool,
    body: Value,
    text: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok(report) => {
            let code = if report.passed { 0 } else { 1 };
            let stdout = if cli.json {
                let mut body = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_name(&cli.command),
                    "passed": report.passed,
                });
                merge(&mut body, report.body);
                format!("{}\n", serde_json::to_string_pretty(&body).expect("reports serialise"))
            } else {
                report.text
            };
            Output { code, stdout, stderr: String::new() }
        }
        Err(failure) => {
            let (code, kind, message) = match failure {
                Failure::Usage(m) => (2, "usage", m),
                Failure::Core(e @ Error::BudgetExceeded { .. }) => (3, "budget", e.to_string()),
                Failure::Core(e) => (2, "input", e.to_string()),
            };
            if cli.json {
                let body = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_name(&cli.command),
                    "error": { "kind": kind, "message": message },
                });
                Output {
                    code,
                    stdout: format!("{}\n", serde_json::to_string_pretty(&body).expect("reports serialise")),
                    stderr: String::new(),
                }
            } else {
                Output { code, stdout: String::new(), stderr: format!("error: {message}\n") }
            }
        }
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate => "validate",
        Command::Stats => "stats",
        Command::Chromatic => "chromatic",
        Command::DeltaCycles => "delta-cycles",
        Command::Nbc => "nbc",
        Command::ListCount => "list-count",
        Command::Plmin => "plmin",
        Command::Thresholds => "thresholds",
        Command::Feval { .. } => "feval",
        Command::Certify { .. } => "certify",
        Command::VerifyAll => "verify-all",
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Run<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {what} {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("invalid {what} {}: {e}", path.display())))
}

struct Ctx<'a> {
    cli: &'a Cli,
    h: Hypergraph,
    budget: Budget,
}

impl Ctx<'_> {
    fn eta(&self) -> Run<Eta> {
        let eta = match &self.cli.eta {
            Some(s) => s.parse::<Eta>()?,
            None => Eta::identity(self.h.m()),
        };
        eta.check_for(&self.h)?;
        Ok(eta)
    }

    fn k(&self) -> Run<u64> {
        match self.cli.k {
            Some(0) => Err(Failure::Usage("--k must be at least 1".into())),
            Some(k) => Ok(k),
            None => Err(Failure::Usage("this command needs --k".into())),
        }
    }

    fn assignment(&self) -> Run<Option<Assignment>> {
        let Some(path) = &self.cli.assignment else {
            return Ok(None);
        };
        let l: Assignment = read_json(path, "assignment")?;
        l.check_for(&self.h)?;
        if let Some(k) = self.cli.k {
            if l.k() as u64 != k {
                return Err(Failure::Usage(format!(
                    "--k {k} does not match the assignment's list size {}",
                    l.k()
                )));
            }
        }
        Ok(Some(l))
    }

    fn require_assignment(&self) -> Run<Assignment> {
        self.assignment()?
            .ok_or_else(|| Failure::Usage("this command needs --assignment".into()))
    }

    fn nb(&self, eta: &Eta) -> Run<NbFamily> {
        Ok(NbFamily::compute(&self.h, eta, &self.budget)?)
    }
}

fn dispatch(cli: &Cli) -> Run<Report> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| Failure::Usage("--input is required".into()))?;
    let h: Hypergraph = read_json(path, "hypergraph")?;
    let mut budget = Budget::default();
    if let Some(s) = cli.budget_subsets {
        if s == 0 {
            return Err(Failure::Usage("--budget-subsets must be positive".into()));
        }
        budget.subsets = s;
    }
    if let Some(c) = cli.budget_colorings {
        if c == 0 {
            return Err(Failure::Usage("--budget-colorings must be positive".into()));
        }
        budget.colorings = c;
    }
    let ctx = Ctx { cli, h, budget };
    match &cli.command {
        Command::Validate => validate(&ctx),
        Command::Stats => stats(&ctx),
        Command::Chromatic => chromatic(&ctx),
        Command::DeltaCycles => delta_cycles(&ctx),
        Command::Nbc => nbc(&ctx),
        Command::ListCount => list_count(&ctx),
        Command::Plmin => plmin(&ctx),
        Command::Thresholds => thresholds_cmd(&ctx),
        Command::Feval { edge } => feval(&ctx, *edge),
        Command::Certify { which } => certify(&ctx, *which),
        Command::VerifyAll => verify_all(&ctx),
    }
}

fn sets(v: impl IntoIterator<Item = EdgeSet>) -> Vec<Vec<usize>> {
    v.into_iter().map(EdgeSet::to_vec).collect()
}

fn show_sets(v: &[Vec<usize>]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(|e| format!("e{e}")).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn validate(ctx: &Ctx) -> Run<Report> {
    let h = &ctx.h;
    Ok(Report {
        passed: true,
        body: json!({ "n": h.n(), "m": h.m(), "uniformity": h.uniformity(), "hypergraph": h }),
        text: format!(
            "valid: n = {}, m = {}, {}\n",
            h.n(),
            h.m(),
            match h.uniformity() {
                Some(r) => format!("{r}-uniform"),
                None => "mixed edge sizes".into(),
            }
        ),
    })
}

fn stats(ctx: &Ctx) -> Run<Report> {
    let h = &ctx.h;
    let s = h.struct_stats();
    let table: Option<Vec<Value>> = s.per_edge_ew.as_ref().map(|ew| {
        ew.iter()
            .enumerate()
            .map(|(e, set)| json!({ "edge": e, "e_r1": set.to_vec(), "size": set.len() }))
            .collect()
    });
    let mut text = format!(
        "n = {}, m = {}, r = {}, gamma = {}, rho = {}\n",
        h.n(),
        h.m(),
        opt(s.r),
        opt(s.gamma),
        opt(s.rho)
    );
    if let Some(ew) = &s.per_edge_ew {
        for (e, set) in ew.iter().enumerate() {
            text.push_str(&format!("  E_(r-1)(e{e}) = {} ({})\n", set, set.len()));
        }
    }
    Ok(Report {
        passed: true,
        body: json!({ "n": h.n(), "m": h.m(), "r": s.r, "gamma": s.gamma, "rho": s.rho, "e_r1": table }),
        text,
    })
}

fn opt(v: Option<usize>) -> String {
    v.map_or("undefined".into(), |x| x.to_string())
}

fn chromatic(ctx: &Ctx) -> Run<Report> {
    let eta = ctx.eta()?;
    let ie = chromatic_polynomial_ie(&ctx.h, &ctx.budget)?;
    let nb = ctx.nb(&eta)?;
    let nbc = chromatic_polynomial_from_family(&ctx.h, &nb);
    let equal = ie == nbc;
    let mut body = json!({
        "eta": eta.to_string(),
        "inclusion_exclusion": { "coeffs": &ie, "text": ie.to_string() },
        "broken_cycle": { "coeffs": &nbc, "text": nbc.to_string() },
        "equal": equal,
    });
    let mut text = format!(
        "inclusion-exclusion: {ie}\nbroken-cycle (eta {eta}): {nbc}\nequal: {equal}\n"
    );
    let mut passed = equal;
    if let Some(k) = ctx.cli.k {
        let value = ie.eval_at(k);
        let mut at_k = json!({ "k": k, "value": value.to_string() });
        text.push_str(&format!("P(H,{k}) = {value}\n"));
        if ctx.budget.check_colorings(k, ctx.h.n()).is_ok() {
            let counted = count_proper_colorings(&ctx.h, k, &ctx.budget)?.to_bigint();
            let agrees = counted == value;
            passed &= agrees;
            merge(&mut at_k, json!({ "enumerated": counted.to_string(), "agrees": agrees }));
            text.push_str(&format!("enumerated: {counted} ({})\n", agree_word(agrees)));
        }
        merge(&mut body, json!({ "at_k": at_k }));
    }
    Ok(Report { passed, body, text })
}

fn agree_word(ok: bool) -> &'static str {
    if ok {
        "agrees"
    } else {
        "DISAGREES"
    }
}

fn delta_cycles(ctx: &Ctx) -> Run<Report> {
    let eta = ctx.eta()?;
    let nb = ctx.nb(&eta)?;
    let cycles = sets(nb.delta_cycles().iter().map(|c| c.0));
    let broken = sets(nb.broken().iter().map(|b| b.0));
    let short = nb.short_broken_cycles();
    let text = format!(
        "delta-cycles: {}\nbroken (eta {eta}): {}\n",
        show_sets(&cycles),
        show_sets(&broken)
    );
    Ok(Report {
        passed: short.is_empty(),
        body: json!({
            "eta": eta.to_string(),
            "delta_cycles": cycles,
            "broken": broken,
            "short_broken": sets(short.iter().map(|b| b.0)),
        }),
        text,
    })
}

fn nbc(ctx: &Ctx) -> Run<Report> {
    let eta = ctx.eta()?;
    let nb = ctx.nb(&eta)?;
    let members = sets(nb.members().iter().copied());
    let closed = nb.is_downward_closed();
    let p = chromatic_polynomial_from_family(&ctx.h, &nb);
    let mut text = format!(
        "{} edge sets contain no broken delta-cycle (eta {eta}); downward closed: {closed}\n",
        nb.len()
    );
    text.push_str(&format!("expansion: {p}\n"));
    for a in &members {
        text.push_str(&format!("  {}\n", show_sets(std::slice::from_ref(a))));
    }
    Ok(Report {
        passed: closed,
        body: json!({
            "eta": eta.to_string(),
            "size": nb.len(),
            "members": members,
            "downward_closed": closed,
            "polynomial": { "coeffs": &p, "text": p.to_string() },
        }),
        text,
    })
}

fn list_count(ctx: &Ctx) -> Run<Report> {
    let l = ctx.require_assignment()?;
    let eta = ctx.eta()?;
    let nb = ctx.nb(&eta)?;
    let expansion = count_l_colorings_from_family(&ctx.h, &l, &nb)?.to_bigint();
    let alpha = alpha_profile(&ctx.h, &l)?;
    let mut body = json!({
        "k": l.k(),
        "eta": eta.to_string(),
        "expansion": expansion.to_string(),
        "alpha": alpha,
    });
    let mut text = format!("P(H,L) by expansion: {expansion}\nalpha(H,L) = {}\n", alpha.total);
    let mut passed = true;
    if ctx.budget.check_colorings(l.k() as u64, ctx.h.n()).is_ok() {
        let counted = count_l_colorings(&ctx.h, &l, &ctx.budget)?.to_bigint();
        passed = counted == expansion;
        merge(&mut body, json!({ "enumerated": counted.to_string(), "equal": passed }));
        text.push_str(&format!("P(H,L) by enumeration: {counted} ({})\n", agree_word(passed)));
    } else {
        text.push_str("enumeration skipped: k^n exceeds the colouring budget\n");
    }
    Ok(Report { passed, body, text })
}

fn plmin(ctx: &Ctx) -> Run<Report> {
    if let (None, Some(kmax)) = (ctx.cli.k, ctx.cli.kmax) {
        let t = thresholds(&ctx.h, kmax, &ctx.budget)?;
        return Ok(empirical_report(&t));
    }
    let k = ctx.k()?;
    let min = plmin_exact(&ctx.h, k as usize, &ctx.budget)?;
    let p = chromatic_polynomial_ie(&ctx.h, &ctx.budget)?;
    let pk = p.eval_at(k);
    let equal = min.equals_chromatic(&p);
    Ok(Report {
        passed: true,
        body: json!({
            "k": k,
            "list_min": min.value.to_string(),
            "chromatic": pk.to_string(),
            "equal": equal,
            "witness": &min.witness,
            "search_nodes": min.nodes,
            "classes": min.classes,
        }),
        text: format!(
            "P_l(H,{k}) = {}\nP(H,{k}) = {pk}\nequal: {equal}\nminimising lists: {:?}\n",
            min.value,
            min.witness.lists()
        ),
    })
}

fn empirical_report(t: &hyperchrom::listcolor::EmpiricalThresholds) -> Report {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "chromatic": r.chromatic.to_string(),
                "list_min": r.list_min.to_string(),
                "equal": r.equal(),
            })
        })
        .collect();
    let mut text = format!(
        "observed for k = 1..{} (equality above kmax is not checked)\nchi = {}, chi_l = {}\n",
        t.kmax, t.chi, t.chi_list
    );
    for r in &t.rows {
        text.push_str(&format!(
            "  k = {}: P = {}, P_l = {}{}\n",
            r.k,
            r.chromatic,
            r.list_min,
            if r.equal() { "" } else { "  (differ)" }
        ));
    }
    text.push_str(&format!(
        "observed tau' = {}, observed tau = {}\n",
        t.tau_prime.map_or("none".into(), |v| v.to_string()),
        t.tau.map_or("none".into(), |v| v.to_string())
    ));
    Report {
        passed: t.identity_holds(),
        body: json!({
            "empirical": {
                "label": "bounded-range observation, not a certified threshold",
                "kmax": t.kmax,
                "chi": t.chi,
                "chi_list": t.chi_list,
                "tau_prime_observed": t.tau_prime,
                "tau_observed": t.tau,
                "rows": rows,
            }
        }),
        text,
    }
}

fn thresholds_cmd(ctx: &Ctx) -> Run<Report> {
    let t = threshold_bounds(&ctx.h);
    let mut text = format!(
        "m = {}, r = {}, gamma = {}, rho = {}\n",
        t.m,
        opt(t.r),
        opt(t.gamma),
        opt(t.rho)
    );
    let line = |name: &str, b: &Option<hyperchrom::bounds::BoundValue>| match b {
        Some(b) => format!(
            "  {name}: {:.6}{} [{}; {}]\n",
            b.value,
            b.exact.as_ref().map_or(String::new(), |x| format!(" = {x}")),
            if b.valid { "applies" } else { "does not apply" },
            b.condition
        ),
        None => format!("  {name}: undefined\n"),
    };
    text.push_str(&line("0.6(m-1) + 0.5 gamma", &t.th4_1));
    text.push_str(&line("m - 1", &Some(t.ssize.clone())));
    text.push_str(&line("1.1346(m-1)", &Some(t.wanghy.clone())));
    text.push_str(&line("2.4(m-1)/(rho ln(m-1))", &t.th4_0_ln));
    text.push_str(&line("2.4(m-1)/(rho log2(m-1))", &t.th4_0_log2));
    let mut body = json!({ "bounds": &t });
    let mut passed = true;
    if let Some(kmax) = ctx.cli.kmax {
        let emp = empirical_report(&thresholds(&ctx.h, kmax, &ctx.budget)?);
        passed = emp.passed;
        text.push_str(&emp.text);
        merge(&mut body, emp.body);
    }
    Ok(Report { passed, body, text })
}

fn feval(ctx: &Ctx, edge: usize) -> Run<Report> {
    let eta = ctx.eta()?;
    let k = ctx.k()?;
    let f = f_eta(&ctx.h, &eta, edge, k, &ctx.budget)?;
    let value = Rational::from(f.value);
    Ok(Report {
        passed: true,
        body: json!({
            "edge": edge,
            "k": k,
            "eta": eta.to_string(),
            "value": &value,
            "value_f64": value.to_f64(),
            "laurent": &f.laurent,
        }),
        text: format!(
            "F(H,e{edge},{k}) = {value} ~ {:.10}\n  = {}\n",
            value.to_f64(),
            f.laurent
        ),
    })
}

fn certify(ctx: &Ctx, which: Which) -> Run<Report> {
    let eta = ctx.eta()?;
    let k = ctx.k()?;
    let (h, b) = (&ctx.h, &ctx.budget);
    let report = match which {
        Which::Cor31 => certify_cor31(h, &eta, k, b)?,
        Which::Len0 => certify_len0(h, &eta, k, b)?,
        Which::Prn1 => certify_prn1(h, &eta, k, b)?,
        Which::Th41 => {
            let l = ctx.assignment()?;
            certify_th41(h, &eta, k, l.as_ref(), ctx.cli.samples, ctx.cli.seed, b)?
        }
    };
    Ok(certificate(report, json!({ "k": k, "eta": eta.to_string(), "seed": ctx.cli.seed })))
}

fn certificate(report: CertificateReport, extra: Value) -> Report {
    let text = certificate_text(&report);
    let mut body = extra;
    merge(&mut body, json!({ "report": &report }));
    Report { passed: report.passed, body, text }
}

fn subject_text(s: &Subject) -> String {
    match s {
        Subject::Global => "global".into(),
        Subject::Edge { edge } => format!("edge e{edge}"),
        Subject::EdgeSet { edges } => format!("edge set {}", show_sets(std::slice::from_ref(edges))),
        Subject::Assignment { lists } => format!("lists {lists:?}"),
    }
}

fn check_text(c: &Check) -> String {
    let mut s = subject_text(&c.subject);
    if let (Some(v), Some(b)) = (&c.value, &c.bound) {
        s.push_str(&format!(": {v} vs {b}"));
    }
    if let Some(n) = &c.note {
        s.push_str(&format!(" ({n})"));
    }
    s
}

fn certificate_text(r: &CertificateReport) -> String {
    let outside = r.checks.iter().filter(|c| !c.in_hypothesis).count();
    let mut text = format!(
        "{}: {} ({} checks, {} outside the hypothesis)\n",
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.checks.len(),
        outside
    );
    if let Some(w) = &r.witness {
        text.push_str(&format!("  witness: {}\n", check_text(w)));
    }
    for (key, v) in &r.summary {
        text.push_str(&format!("  {key} = {v}\n"));
    }
    for w in &r.warnings {
        text.push_str(&format!("  warning: {w}\n"));
    }
    text
}

/// One named identity in the verify-all report.
fn item(name: &str, passed: bool, detail: Value) -> Value {
    json!({ "name": name, "passed": passed, "detail": detail })
}

fn verify_all(ctx: &Ctx) -> Run<Report> {
    let h = &ctx.h;
    let b = &ctx.budget;
    let k = ctx.k()?;
    let eta = ctx.eta()?;
    let nb = ctx.nb(&eta)?;
    let mut items = Vec::new();
    let mut text = String::new();
    let mut push = |name: &str, passed: bool, detail: Value, line: String| {
        text.push_str(&format!("{} {name}: {line}\n", if passed { "ok  " } else { "FAIL" }));
        items.push(item(name, passed, detail));
    };

    let ie = chromatic_polynomial_ie(h, b)?;
    let nbc = chromatic_polynomial_from_family(h, &nb);
    push(
        "expansions",
        ie == nbc,
        json!({ "inclusion_exclusion": ie.to_string(), "broken_cycle": nbc.to_string() }),
        format!("{ie} / {nbc}"),
    );
    if b.check_colorings(k, h.n()).is_ok() {
        let counted = count_proper_colorings(h, k, b)?.to_bigint();
        let value = ie.eval_at(k);
        push(
            "enumeration",
            counted == value,
            json!({ "k": k, "enumerated": counted.to_string(), "polynomial": value.to_string() }),
            format!("P(H,{k}) = {value}, enumerated {counted}"),
        );
    }
    push(
        "downward_closed",
        nb.is_downward_closed(),
        json!({ "size": nb.len() }),
        format!("{} members", nb.len()),
    );

    let uniform = h.uniformity().is_some();
    if uniform && h.m() > 0 {
        let rep = check_wanghyc_family(h, &nb)?;
        push(
            "component_bound",
            rep.passed,
            json!({ "report": &rep }),
            format!("{} sets checked", rep.checks.len()),
        );
    }

    let table = if uniform || h.m() == 0 {
        Some(FactorTable::from_family(h, nb.clone())?)
    } else {
        None
    };
    if let Some(t) = &table {
        let rep = hyperchrom::bounds::cor31_from_table(t, k);
        let factors: Vec<Value> = (0..h.m())
            .map(|e| json!(Rational::from(t.value(e, k))))
            .collect();
        push(
            "factor_nonnegative",
            rep.passed,
            json!({ "factors": factors }),
            format!(
                "F = [{}]",
                (0..h.m())
                    .map(|e| Rational::from(t.value(e, k)).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );
    }

    if let Some(l) = ctx.assignment()? {
        let lk = l.k() as u64;
        let expansion = count_l_colorings_from_family(h, &l, &nb)?.to_bigint();
        if b.check_colorings(lk, h.n()).is_ok() {
            let counted = count_l_colorings(h, &l, b)?.to_bigint();
            push(
                "list_expansion",
                counted == expansion,
                json!({ "enumerated": counted.to_string(), "expansion": expansion.to_string() }),
                format!("P(H,L) = {counted}, expansion {expansion}"),
            );
        }
        let (diff, method) = exact_difference(h, &nb, &l, b)?;
        let identity = difference_expansion(h, &nb, &l)?;
        push(
            "difference_identity",
            identity == diff,
            json!({ "difference": diff.to_string(), "expansion": identity.to_string(), "method": method }),
            format!("P(H,L) - P(H,k) = {diff}, signed beta sum {identity}"),
        );
        let sandwich = check_sandwich_all(h, &l)?;
        push(
            "sandwich",
            sandwich.passed,
            json!({ "checks": sandwich.checks.len(), "witness": &sandwich.witness }),
            format!("{} inequalities", sandwich.checks.len()),
        );
        if let Some(t) = &table {
            let alpha = alpha_profile(h, &l)?.total;
            let bound = pp15_from_table(h, t, &l)?;
            let diff_q = BigRational::from_integer(diff.clone());
            let r = t.r as i64;
            let rhs = hyperchrom::exact::pow_k(lk, h.n() as i64 - r)
                * BigRational::from_integer(BigInt::from(alpha))
                / BigRational::from_integer(50.into());
            push(
                "factor_bound",
                diff_q >= bound,
                json!({ "difference": Rational::integer(diff.clone()), "bound": Rational::from(bound.clone()) }),
                format!("difference {diff} >= bound {}", Rational::from(bound.clone())),
            );
            let regime = th41_regime(h, lk);
            let holds = bound >= rhs;
            // outside the regime the comparison is informational
            push(
                "alpha_fraction",
                holds || !regime,
                json!({
                    "bound": Rational::from(bound.clone()),
                    "alpha_over_50": Rational::from(rhs.clone()),
                    "holds": holds,
                    "in_regime": regime,
                }),
                format!(
                    "bound {} >= k^(n-r) alpha/50 = {}: {holds}{}",
                    Rational::from(bound),
                    Rational::from(rhs),
                    if regime { "" } else { " (outside m >= 5 regime)" }
                ),
            );
        }
    }

    let passed = items.iter().all(|i| i["passed"] == json!(true));
    Ok(Report {
        passed,
        body: json!({ "k": k, "eta": eta.to_string(), "checks": items }),
        text,
    })
}

/// `m >= 5`, `r >= 3`, `gamma <= 0.8(m-1)` and `k >= 0.6(m-1) + 0.5 gamma`.
fn th41_regime(h: &Hypergraph, k: u64) -> bool {
    let s = h.struct_stats();
    match (s.r, s.gamma) {
        (Some(r), Some(g)) if r >= 3 && h.m() >= 5 => {
            let (m1, g) = (h.m() as u64 - 1, g as u64);
            5 * g <= 4 * m1 && 10 * k >= 6 * m1 + 5 * g
        }
        _ => false,
    }
}
