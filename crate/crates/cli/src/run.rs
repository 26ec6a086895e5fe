//! Dispatch, report assembly, exit-code mapping.
//!
//! Every run prints exactly one document to stdout: a JSON envelope
//! {"command", "input", "config", "result", "warnings"} with stable key
//! order, or CSV for family-scan on request. Reruns with identical flags
//! are byte-identical; anything time-dependent goes to stderr.

use std::time::Instant;

use jacring::{
    classify_ci, family_scan, find_lefschetz_witness, hodge_degree, hodge_slice_dims_unchecked,
    infer_num_vars, lefschetz_check, parse_polynomial, parse_rational, rank_drop_delta,
    socle_degree, total_tjurina, BigRational, Domain, Error, FamilyScanConfig, FamilyTemplate,
    FiberRow, HfVerdict, Hypersurface, LefschetzMode, LefschetzReport, LefschetzVerdict,
    Polynomial, PrimeField, QuotientRing, Rationals, Result, RingDescriptor, WitnessSearch,
    YukawaPath, AGREEMENT_PRIMES,
};
use serde_json::{json, Map, Value};

use crate::args::*;

pub fn run(cmd: Command) -> i32 {
    let started = Instant::now();
    let name = command_name(&cmd);
    let common = command_common(&cmd).clone();
    let input = input_echo(&cmd);
    match execute(&cmd) {
        Ok(exec) => {
            let doc = envelope(name, input, &common, &exec.primes, exec.result, &exec.warnings);
            match output_format(&cmd) {
                FormatArg::Json => println!("{}", render(&doc)),
                FormatArg::Csv => print!("{}", family_csv(&doc["result"])),
            }
            eprintln!("{name}: ok in {:.1?}", started.elapsed());
            0
        }
        Err(e) => {
            let result = json!({"error": {"kind": error_kind(&e), "message": e.to_string()}});
            let primes = PrimesUsed::from_common(&common);
            let doc = envelope(name, input, &common, &primes, result, &[]);
            println!("{}", render(&doc));
            eprintln!("{name}: error: {e}");
            if e.is_refusal() {
                1
            } else {
                2
            }
        }
    }
}

struct Execution {
    result: Value,
    warnings: Vec<String>,
    primes: PrimesUsed,
}

enum PrimesUsed {
    Single(u64),
    Multi,
    Rational,
}

impl PrimesUsed {
    fn from_common(c: &CommonArgs) -> Self {
        if c.rational {
            PrimesUsed::Rational
        } else if c.multi_prime {
            PrimesUsed::Multi
        } else {
            PrimesUsed::Single(c.prime)
        }
    }
}

/// One command body, generic over the coefficient domain.
trait Exec {
    fn exec<D: Domain>(&self, common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)>;
}

/// Runs a command body over the selected backend: one prime, exact
/// rationals, or three independent primes with an agreement check.
fn with_backend<E: Exec>(e: &E, common: &CommonArgs) -> Result<Execution> {
    if common.rational {
        let (result, warnings) = e.exec(common, &Rationals)?;
        return Ok(Execution {
            result,
            warnings,
            primes: PrimesUsed::Rational,
        });
    }
    if common.multi_prime {
        let mut runs = Vec::with_capacity(AGREEMENT_PRIMES.len());
        for &p in AGREEMENT_PRIMES.iter() {
            runs.push((p, e.exec(common, &PrimeField::new(p)?)?));
        }
        let agree = runs.iter().all(|(_, out)| *out == runs[0].1);
        if agree {
            let (result, warnings) = runs.swap_remove(0).1;
            return Ok(Execution {
                result,
                warnings,
                primes: PrimesUsed::Multi,
            });
        }
        let per: Vec<Value> = runs
            .iter()
            .map(|(p, (r, _))| json!({"prime": p, "result": r}))
            .collect();
        return Ok(Execution {
            result: json!({"agreement": false, "per_prime": per}),
            warnings: vec![format!(
                "results differ across primes {AGREEMENT_PRIMES:?}; \
                 at least one prime is unlucky for this input"
            )],
            primes: PrimesUsed::Multi,
        });
    }
    let field = PrimeField::new(common.prime)?;
    let (result, warnings) = e.exec(common, &field)?;
    Ok(Execution {
        result,
        warnings,
        primes: PrimesUsed::Single(common.prime),
    })
}

fn execute(cmd: &Command) -> Result<Execution> {
    match cmd {
        Command::Hilbert(a) => with_backend(a, &a.common),
        Command::Hodge(a) => with_backend(a, &a.common),
        Command::Lefschetz(a) => with_backend(a, &a.common),
        Command::Yukawa(a) => with_backend(a, &a.common),
        Command::Torelli(a) => with_backend(a, &a.common),
        Command::Classify(a) => with_backend(a, &a.common),
        Command::FamilyScan(a) => {
            if a.format == FormatArg::Csv && a.common.multi_prime {
                return Err(Error::InvalidInput(
                    "csv output reports a single run; drop --multi-prime".into(),
                ));
            }
            with_backend(a, &a.common)
        }
        Command::Tjurina(a) => with_backend(a, &a.common),
        Command::Delta(a) => with_backend(a, &a.common),
    }
}

// ---------------------------------------------------------------- inputs

/// Number of variables: explicit flag, else smallest ring containing
/// every variable mentioned (at least one).
fn resolved_vars(texts: &[&str], explicit: Option<usize>) -> usize {
    explicit.unwrap_or_else(|| {
        texts
            .iter()
            .map(|t| infer_num_vars(t))
            .max()
            .unwrap_or(0)
            .max(1)
    })
}

fn resolved_weights(n: usize, weights: &Option<Vec<u32>>) -> Vec<u32> {
    weights.clone().unwrap_or_else(|| vec![1; n])
}

fn build_ring<D: Domain>(
    domain: &D,
    n: usize,
    weights: &Option<Vec<u32>>,
) -> Result<RingDescriptor<D>> {
    match weights {
        Some(w) => RingDescriptor::new(n, w.clone(), domain.clone()),
        None => RingDescriptor::standard(n, domain.clone()),
    }
}

fn parse_nonzero<D: Domain>(text: &str, ring: &RingDescriptor<D>) -> Result<Polynomial<D>> {
    let f = parse_polynomial(text, ring)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f)
}

fn parse_poly_input<D: Domain>(input: &PolyArgs, domain: &D) -> Result<Polynomial<D>> {
    let n = resolved_vars(&[input.poly.as_str()], input.vars);
    let ring = build_ring(domain, n, &input.weights)?;
    parse_nonzero(&input.poly, &ring)
}

fn split_ideal(text: &str) -> Result<Vec<String>> {
    let parts: Vec<String> = text.split(';').map(|s| s.trim().to_string()).collect();
    if parts.iter().any(String::is_empty) {
        return Err(Error::InvalidInput(
            "empty generator in the --ideal list".into(),
        ));
    }
    Ok(parts)
}

/// Quotient from either a Jacobian ideal (--poly) or explicit
/// generators (--ideal).
fn quotient_from<D: Domain>(
    domain: &D,
    poly: &Option<String>,
    ideal: &Option<String>,
    vars: Option<usize>,
    weights: &Option<Vec<u32>>,
) -> Result<QuotientRing<D>> {
    match (poly, ideal) {
        (Some(p), None) => {
            let n = resolved_vars(&[p.as_str()], vars);
            let ring = build_ring(domain, n, weights)?;
            QuotientRing::jacobian(&parse_nonzero(p, &ring)?)
        }
        (None, Some(text)) => {
            let parts = split_ideal(text)?;
            let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
            let n = resolved_vars(&refs, vars);
            let ring = build_ring(domain, n, weights)?;
            let gens = parts
                .iter()
                .map(|g| parse_polynomial(g, &ring))
                .collect::<Result<Vec<_>>>()?;
            QuotientRing::new(ring, gens)
        }
        _ => Err(Error::InvalidInput(
            "exactly one of --poly and --ideal is required".into(),
        )),
    }
}

// -------------------------------------------------------------- commands

impl Exec for HilbertArgs {
    fn exec<D: Domain>(&self, common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let q = quotient_from(domain, &self.poly, &self.ideal, self.vars, &self.weights)?;
        let mut warnings = Vec::new();
        let (dims, top, truncated) = match common.degree_cap {
            Some(cap) => {
                if cap < 0 {
                    return Err(Error::InvalidInput("--degree-cap must be >= 0".into()));
                }
                let dims: Vec<usize> = (0..=cap).map(|k| q.graded_dim(k)).collect();
                warnings.push(format!(
                    "dimension sequence truncated at degree {cap}; no Artinian certificate"
                ));
                (dims, None, true)
            }
            None => {
                let (dims, top) = q.hilbert_function(None)?;
                (dims, top, false)
            }
        };
        let total: usize = dims.iter().sum();
        Ok((
            json!({
                "hilbert_function": dims,
                "top_degree": top,
                "total_dim": total,
                "truncated": truncated,
            }),
            warnings,
        ))
    }
}

impl Exec for HodgeArgs {
    fn exec<D: Domain>(&self, _common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let f = parse_poly_input(&self.input, domain)?;
        if self.raw {
            let d = f.homogeneous_degree()?;
            let dims = hodge_slice_dims_unchecked(&f, self.dim)?;
            let degrees: Vec<i64> = (0..=self.dim)
                .map(|p| hodge_degree(self.dim, d, p))
                .collect::<Result<_>>()?;
            Ok((
                json!({
                    "slice_dims": dims,
                    "hodge_degrees": degrees,
                    "socle": socle_degree(self.dim, d),
                    "degree": d,
                    "dimension": self.dim,
                }),
                vec![
                    "raw graded dimensions: smoothness was not certified, so the Hodge \
                     interpretation may not apply"
                        .into(),
                ],
            ))
        } else {
            let h = Hypersurface::new(f, self.dim)?;
            Ok((
                json!({
                    "hodge_numbers": h.hodge_numbers(),
                    "hodge_degrees": h.hodge_degrees(),
                    "socle": h.socle(),
                    "degree": h.degree(),
                    "dimension": self.dim,
                }),
                Vec::new(),
            ))
        }
    }
}

impl Exec for LefschetzArgs {
    fn exec<D: Domain>(&self, common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let q = quotient_from(domain, &self.poly, &self.ideal, self.vars, &self.weights)?;
        let mode = match self.mode {
            ModeArg::Strong => LefschetzMode::Strong,
            ModeArg::Weak => LefschetzMode::Weak,
        };
        if let Some(text) = &self.witness {
            let ell = parse_nonzero(text, q.ring())?;
            let rep = lefschetz_check(&q, &ell, mode, common.degree_cap)?;
            let outcome = if rep.passed() { "witness" } else { "fails" };
            return Ok((lefschetz_value(outcome, &rep), Vec::new()));
        }
        match find_lefschetz_witness(&q, mode, common.samples, common.seed, common.degree_cap)? {
            WitnessSearch::Witness(rep) => Ok((lefschetz_value("witness", &rep), Vec::new())),
            WitnessSearch::NoneFound {
                candidates_tested,
                best,
            } => {
                let best = best
                    .as_ref()
                    .map(|r| lefschetz_value("fails", r))
                    .unwrap_or(Value::Null);
                Ok((
                    json!({
                        "outcome": "none_found",
                        "mode": mode.as_str(),
                        "candidates_tested": candidates_tested,
                        "best": best,
                    }),
                    vec![
                        "no witness among the sampled candidates; this is evidence, not a \
                         proof of failure"
                            .into(),
                    ],
                ))
            }
            WitnessSearch::Obstructed(hf) => {
                let (verdict, k) = match hf.verdict {
                    HfVerdict::NotSymmetric { k } => ("NotSymmetric", k),
                    HfVerdict::NotUnimodal { k } => ("NotUnimodal", k),
                    HfVerdict::NoObstruction => {
                        unreachable!("an obstructed search carries an obstruction")
                    }
                };
                Ok((
                    json!({
                        "outcome": "obstructed",
                        "mode": mode.as_str(),
                        "verdict": verdict,
                        "at_degree": k,
                        "hilbert_function": hf.dims,
                        "top_degree": hf.top_degree,
                    }),
                    Vec::new(),
                ))
            }
        }
    }
}

fn lefschetz_value<D: Domain>(outcome: &str, rep: &LefschetzReport<D>) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            json!({
                "degree": c.degree,
                "power": c.power,
                "rank": c.rank,
                "expected": c.expected,
                "requires_iso": c.requires_iso,
            })
        })
        .collect();
    let failed_at = match rep.verdict {
        LefschetzVerdict::Witness => Value::Null,
        LefschetzVerdict::Fails { degree, power } => json!({"degree": degree, "power": power}),
    };
    json!({
        "outcome": outcome,
        "mode": rep.mode.as_str(),
        "linear_form": rep.ell.to_text(),
        "hilbert_function": rep.hilbert_function,
        "top_degree": rep.top_degree,
        "checks": checks,
        "failed_at": failed_at,
    })
}

impl Exec for YukawaArgs {
    fn exec<D: Domain>(&self, common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let f = parse_poly_input(&self.input, domain)?;
        let h = Hypersurface::new(f, self.dim)?;
        if let Some(text) = &self.class {
            let xi = parse_polynomial(text, h.polynomial().ring())?;
            let eval = match self.path {
                Some(PathArg::Expanded) => h.yukawa_map_via(&xi, YukawaPath::ExpandedPower)?,
                Some(PathArg::Composed) => h.yukawa_map_via(&xi, YukawaPath::ComposedSteps)?,
                None => h.yukawa_map(&xi)?,
            };
            let path = match eval.path {
                YukawaPath::ExpandedPower => "expanded_power",
                YukawaPath::ComposedSteps => "composed_steps",
            };
            return Ok((
                json!({
                    "class": xi.to_text(),
                    "rank": eval.rank,
                    "source_dim": eval.map.source_dim(),
                    "target_dim": eval.map.target_dim(),
                    "source_degree": eval.map.source_degree,
                    "target_degree": eval.map.target_degree,
                    "path": path,
                }),
                Vec::new(),
            ));
        }
        let rep = h.max_yukawa_rank(common.samples, common.seed)?;
        Ok((
            json!({
                "d_M": rep.best_rank,
                "theoretical_max": rep.theoretical_max,
                "verdict": rep.verdict.as_str(),
                "witness": rep.witness.as_ref().map(|w| w.to_text()),
                "classes_tested": rep.classes_tested,
            }),
            Vec::new(),
        ))
    }
}

impl Exec for TorelliArgs {
    fn exec<D: Domain>(&self, _common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let f = parse_poly_input(&self.input, domain)?;
        let h = Hypersurface::new(f, self.dim)?;
        let rep = h.torelli_rank()?;
        Ok((
            json!({
                "rank": rep.rank,
                "source_dim": rep.source_dim,
                "injective": rep.injective,
            }),
            Vec::new(),
        ))
    }
}

impl Exec for ClassifyArgs {
    fn exec<D: Domain>(&self, _common: &CommonArgs, _domain: &D) -> Result<(Value, Vec<String>)> {
        let p = classify_ci(self.dim, &self.degrees)?;
        Ok((
            json!({
                "dimension": p.n,
                "codimension": p.codimension,
                "ambient_dim": p.n + p.codimension,
                "degrees": p.degrees,
                "kappa": p.kappa,
                "class": p.class.as_str(),
                "is_quadric": p.is_quadric,
            }),
            Vec::new(),
        ))
    }
}

impl Exec for FamilyScanArgs {
    fn exec<D: Domain>(&self, common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let n = resolved_vars(&[self.family.as_str()], self.vars);
        let template = FamilyTemplate::parse_standard(&self.family, n)?;
        let ts: Vec<BigRational> = self
            .t_values
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_>>()?;
        let config = FamilyScanConfig {
            samples: common.samples,
            seed: common.seed,
            delta_degree: self.delta_degree,
            tjurina_extra: common.degree_cap.unwrap_or(20).max(1),
            threads: common.threads,
        };
        let scan = family_scan(&template, domain, &ts, &config)?;
        let rows: Vec<Value> = scan.rows.iter().map(fiber_value).collect();
        Ok((
            json!({
                "family": self.family,
                "sigma": scan.sigma,
                "delta_degree": scan.delta_degree,
                "min_smooth_variation": scan.min_smooth_variation,
                "rows": rows,
            }),
            Vec::new(),
        ))
    }
}

fn fiber_value<D: Domain>(r: &FiberRow<D>) -> Value {
    let (yukawa_rank, yukawa_verdict) = match &r.variation {
        Some(v) => (json!(v.best_rank), json!(v.verdict.as_str())),
        None => (Value::Null, Value::Null),
    };
    json!({
        "t": r.t.to_string(),
        "zero_fiber": r.zero_fiber,
        "smooth": r.smooth,
        "dim_a0": r.dim_first_hodge,
        "dim_mid": r.dim_middle,
        "dim_sigma": r.dim_socle,
        "dim_sigma_plus1": r.dim_above_socle,
        "tjurina": r.tjurina,
        "yukawa_rank": yukawa_rank,
        "yukawa_verdict": yukawa_verdict,
        "delta": r.delta.as_ref().map(|d| d.delta),
        "warnings": r.warnings,
    })
}

impl Exec for TjurinaArgs {
    fn exec<D: Domain>(&self, common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let f = parse_poly_input(&self.input, domain)?;
        let rep = total_tjurina(&f, common.degree_cap)?;
        Ok((
            json!({
                "total": rep.total,
                "stabilized_at": rep.stabilized_at,
            }),
            Vec::new(),
        ))
    }
}

impl Exec for DeltaArgs {
    fn exec<D: Domain>(&self, _common: &CommonArgs, domain: &D) -> Result<(Value, Vec<String>)> {
        let f = parse_poly_input(&self.input, domain)?;
        let rep = rank_drop_delta(&f, self.degree)?;
        let mut warnings = Vec::new();
        if rep.trivially_zero {
            warnings.push(format!(
                "degree {} lies below every Jacobian generator degree; dim R(F)_{} equals \
                 the ambient dim S_{} = {} for every fiber of this shape, so the drop is 0 \
                 for degree reasons",
                rep.degree, rep.degree, rep.degree, rep.actual_dim
            ));
        }
        Ok((
            json!({
                "degree": rep.degree,
                "actual_dim": rep.actual_dim,
                "smooth_dim": rep.smooth_dim,
                "delta": rep.delta,
                "trivially_zero": rep.trivially_zero,
            }),
            warnings,
        ))
    }
}

// --------------------------------------------------------------- reports

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Hilbert(_) => "hilbert",
        Command::Hodge(_) => "hodge",
        Command::Lefschetz(_) => "lefschetz",
        Command::Yukawa(_) => "yukawa",
        Command::Torelli(_) => "torelli",
        Command::Classify(_) => "classify",
        Command::FamilyScan(_) => "family-scan",
        Command::Tjurina(_) => "tjurina",
        Command::Delta(_) => "delta",
    }
}

fn command_common(cmd: &Command) -> &CommonArgs {
    match cmd {
        Command::Hilbert(a) => &a.common,
        Command::Hodge(a) => &a.common,
        Command::Lefschetz(a) => &a.common,
        Command::Yukawa(a) => &a.common,
        Command::Torelli(a) => &a.common,
        Command::Classify(a) => &a.common,
        Command::FamilyScan(a) => &a.common,
        Command::Tjurina(a) => &a.common,
        Command::Delta(a) => &a.common,
    }
}

fn output_format(cmd: &Command) -> FormatArg {
    match cmd {
        Command::FamilyScan(a) => a.format,
        _ => FormatArg::Json,
    }
}

fn input_echo(cmd: &Command) -> Value {
    match cmd {
        Command::Hilbert(a) => source_echo(&a.poly, &a.ideal, a.vars, &a.weights),
        Command::Hodge(a) => {
            let mut v = poly_echo(&a.input);
            insert(&mut v, "dim", json!(a.dim));
            insert(&mut v, "raw", json!(a.raw));
            v
        }
        Command::Lefschetz(a) => {
            let mut v = source_echo(&a.poly, &a.ideal, a.vars, &a.weights);
            let mode = match a.mode {
                ModeArg::Strong => "strong",
                ModeArg::Weak => "weak",
            };
            insert(&mut v, "mode", json!(mode));
            insert(&mut v, "witness", json!(a.witness));
            v
        }
        Command::Yukawa(a) => {
            let mut v = poly_echo(&a.input);
            insert(&mut v, "dim", json!(a.dim));
            insert(&mut v, "class", json!(a.class));
            let path = a.path.map(|p| match p {
                PathArg::Expanded => "expanded",
                PathArg::Composed => "composed",
            });
            insert(&mut v, "path", json!(path));
            v
        }
        Command::Torelli(a) => {
            let mut v = poly_echo(&a.input);
            insert(&mut v, "dim", json!(a.dim));
            v
        }
        Command::Classify(a) => json!({
            "dim": a.dim,
            "degrees": a.degrees,
        }),
        Command::FamilyScan(a) => {
            let n = resolved_vars(&[a.family.as_str()], a.vars);
            let format = match a.format {
                FormatArg::Json => "json",
                FormatArg::Csv => "csv",
            };
            json!({
                "family": a.family,
                "vars": n,
                "t_values": a.t_values,
                "delta_degree": a.delta_degree,
                "format": format,
            })
        }
        Command::Tjurina(a) => poly_echo(&a.input),
        Command::Delta(a) => {
            let mut v = poly_echo(&a.input);
            insert(&mut v, "degree", json!(a.degree));
            v
        }
    }
}

fn poly_echo(input: &PolyArgs) -> Value {
    let n = resolved_vars(&[input.poly.as_str()], input.vars);
    json!({
        "poly": input.poly,
        "vars": n,
        "weights": resolved_weights(n, &input.weights),
    })
}

fn source_echo(
    poly: &Option<String>,
    ideal: &Option<String>,
    vars: Option<usize>,
    weights: &Option<Vec<u32>>,
) -> Value {
    let gens: Option<Vec<String>> = ideal
        .as_ref()
        .map(|t| t.split(';').map(|s| s.trim().to_string()).collect());
    let texts: Vec<&str> = match (poly, &gens) {
        (Some(p), _) => vec![p.as_str()],
        (None, Some(g)) => g.iter().map(String::as_str).collect(),
        _ => Vec::new(),
    };
    let n = resolved_vars(&texts, vars);
    json!({
        "poly": poly,
        "ideal": gens,
        "vars": n,
        "weights": resolved_weights(n, weights),
    })
}

fn insert(v: &mut Value, key: &str, value: Value) {
    v.as_object_mut()
        .expect("input echo is an object")
        .insert(key.to_string(), value);
}

fn config_value(c: &CommonArgs, primes: &PrimesUsed) -> Value {
    let mut m = Map::new();
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    match primes {
        PrimesUsed::Single(p) => {
            m.insert("prime".into(), json!(p));
        }
        PrimesUsed::Multi => {
            m.insert("prime".into(), json!(AGREEMENT_PRIMES[0]));
            m.insert("primes".into(), json!(AGREEMENT_PRIMES));
        }
        PrimesUsed::Rational => {
            m.insert("prime".into(), Value::Null);
        }
    }
    m.insert("rational_mode".into(), json!(c.rational));
    m.insert("seed".into(), json!(c.seed));
    m.insert("samples".into(), json!(c.samples));
    m.insert("degree_cap".into(), json!(c.degree_cap));
    m.insert("threads".into(), json!(c.threads));
    Value::Object(m)
}

fn envelope(
    name: &str,
    input: Value,
    common: &CommonArgs,
    primes: &PrimesUsed,
    result: Value,
    warnings: &[String],
) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(name));
    m.insert("input".into(), input);
    m.insert("config".into(), config_value(common, primes));
    m.insert("result".into(), result);
    m.insert("warnings".into(), json!(warnings));
    Value::Object(m)
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn family_csv(result: &Value) -> String {
    const COLUMNS: [&str; 9] = [
        "t",
        "smooth",
        "dim_a0",
        "dim_mid",
        "dim_sigma",
        "dim_sigma_plus1",
        "tjurina",
        "yukawa_rank",
        "delta",
    ];
    let mut out = COLUMNS.join(",");
    out.push('\n');
    if let Some(rows) = result.get("rows").and_then(Value::as_array) {
        for row in rows {
            let cells: Vec<String> = COLUMNS.iter().map(|k| csv_cell(&row[*k])).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "Parse",
        Error::VariableOutOfRange { .. } => "VariableOutOfRange",
        Error::RingMismatch => "RingMismatch",
        Error::NonHomogeneous { .. } => "NonHomogeneous",
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::NotPrime(_) => "NotPrime",
        Error::BadDenominator { .. } => "BadDenominator",
        Error::SingularInput { .. } => "SingularInput",
        Error::NotArtinian { .. } => "NotArtinian",
        Error::NoStabilization { .. } => "NoStabilization",
        Error::NonCiShape(_) => "NonCiShape",
        Error::InvalidInput(_) => "InvalidInput",
    }
}
