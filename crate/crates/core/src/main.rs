//! Thin command-line surface over the library. One subcommand per
//! capability; every command prints either a markdown summary or a
//! deterministic JSON envelope (see `schema/report.schema.json`).
//!
//! Exit codes: 0 success, 2 usage or malformed input, 3 out-of-scope
//! refusal, 4 internal consistency failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jordan_eisenstein::cfunction::{
    closed_form_c, gk_cfunction, quaternionic_closed_form, quaternionic_restricted,
    sl2_quaternion_closed, sl2_quaternion_series,
};
use jordan_eisenstein::eisenstein::{chi_s_coords, global_pole_ledger, rho_coords};
use jordan_eisenstein::error::Error;
use jordan_eisenstein::jordan::{
    build_tower, classify_abelian_parabolics, jordan_invariants, parabolic_datum, ParabolicDatum,
};
use jordan_eisenstein::rational::{parse_rat, rat_string, Rat};
use jordan_eisenstein::reducibility::{
    jantzen_pyramid, reducibility_points, verify_fj_consistency, CharacterClass, ChiDTag,
};
use jordan_eisenstein::report::{markdown_table, sig12, ReportEnvelope};
use jordan_eisenstein::root_system::{build_root_system, CartanType, Family, RootSystem};
use jordan_eisenstein::zeta::{full_ledger, PoleLedger, ZetaProduct, ZetaProfile};

#[derive(Parser)]
#[command(
    name = "jordan-eisenstein",
    version,
    about = "Exact invariants, c-functions and pole ledgers for abelian-radical maximal parabolics",
    after_help = "JSON envelopes validate against schema/report.schema.json (shipped with the crate)."
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Gk,
    Closed,
    Restricted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChiArg {
    Trivial,
    Quadratic,
    ChiD,
    ChiK,
}

impl From<ChiArg> for CharacterClass {
    fn from(c: ChiArg) -> CharacterClass {
        match c {
            ChiArg::Trivial => CharacterClass::Trivial,
            ChiArg::Quadratic => CharacterClass::QuadraticNontrivial,
            ChiArg::ChiD => CharacterClass::ChiD,
            ChiArg::ChiK => CharacterClass::ChiK,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChiDArg {
    Trivial,
    QuadraticField,
    Undefined,
}

impl From<ChiDArg> for ChiDTag {
    fn from(c: ChiDArg) -> ChiDTag {
        match c {
            ChiDArg::Trivial => ChiDTag::Trivial,
            ChiDArg::QuadraticField => ChiDTag::QuadraticField,
            ChiDArg::Undefined => ChiDTag::Undefined,
        }
    }
}

#[derive(Args)]
struct TypeRank {
    /// Type family: one of A, B, C, D, E.
    family: String,
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the abelian-radical self-opposite nodes with (dim N, r, d).
    Classify(TypeRank),

    /// Print the descending tower from a marked node down to rank one.
    Tower {
        #[command(flatten)]
        type_rank: TypeRank,
        /// Marked node; defaults to the unique qualifying node.
        #[arg(long)]
        node: Option<usize>,
    },

    /// Intertwining c-function, as a canonical zeta-product string plus its
    /// pole/zero ledger. Positional form: `cfun A 3` or `cfun --quaternionic r=2`.
    Cfun {
        /// `FAMILY RANK` or, with --quaternionic, `r=R`.
        args: Vec<String>,
        #[arg(long)]
        node: Option<usize>,
        /// Compute one route only; default compares the applicable routes.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Rank-one factorization over the quaternionic restricted system.
        #[arg(long)]
        quaternionic: bool,
        /// Ledger profile: padic:<q>, real, or global.
        #[arg(long, default_value = "padic:2")]
        profile: String,
        /// Ledger window `a,b` (rational endpoints).
        #[arg(long, default_value = "-10,10")]
        window: String,
    },

    /// Reducibility points of the degenerate principal series: `reducibility r=2 d=6`.
    Reducibility {
        /// `r=<rank>` and `d=<dim>`.
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = ChiArg::Trivial)]
        chi: ChiArg,
        #[arg(long = "chi-d", value_enum, default_value_t = ChiDArg::Trivial)]
        chi_d: ChiDArg,
        /// Replay the descent recursion and report the witness trace.
        #[arg(long)]
        verify: bool,
    },

    /// Certified poles of the Eisenstein series: `poles r=3 d=8`.
    Poles {
        /// `r=<rank>` and `d=<dim>`.
        params: Vec<String>,
        #[arg(long = "chi-d", value_enum, default_value_t = ChiDArg::Trivial)]
        chi_d: ChiDArg,
        /// Assert the split-or-anisotropic hypotheses on the quadratic space.
        #[arg(long, default_value_t = true)]
        hypotheses_ok: bool,
    },

    /// Truncated pyramid of subquotients: `pyramid r=3 i=1`.
    Pyramid {
        /// `r=<rank>` and `i=<index>`.
        params: Vec<String>,
    },

    /// Partial sums of the quaternionic rank-one expansion: `series q=3 s=2`.
    Series {
        /// `q=<prime power>`, `s=<real>`, optional `terms=<n>`.
        params: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidInput(_) | Error::Singular(_) | Error::Divergent(_) => 2,
        Error::OutOfScope(_) => 3,
        Error::Inconsistency(_) => 4,
    }
}

type CliResult<T> = Result<T, Error>;

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Classify(tr) => cmd_classify(tr, cli.format),
        Command::Tower { type_rank, node } => cmd_tower(type_rank, *node, cli.format),
        Command::Cfun {
            args,
            node,
            method,
            quaternionic,
            profile,
            window,
        } => cmd_cfun(
            args,
            *node,
            *method,
            *quaternionic,
            profile,
            window,
            cli.format,
        ),
        Command::Reducibility {
            params,
            chi,
            chi_d,
            verify,
        } => cmd_reducibility(params, (*chi).into(), (*chi_d).into(), *verify, cli.format),
        Command::Poles {
            params,
            chi_d,
            hypotheses_ok,
        } => cmd_poles(params, (*chi_d).into(), *hypotheses_ok, cli.format),
        Command::Pyramid { params } => cmd_pyramid(params, cli.format),
        Command::Series { params } => cmd_series(params, cli.format),
    }
}

fn build_system(tr: &TypeRank) -> CliResult<RootSystem> {
    let family = Family::from_str(&tr.family)?;
    Ok(build_root_system(CartanType::new(family, tr.rank)?))
}

/// Parses `key=value` positional parameters against an allowed key list.
fn kv_params(params: &[String], allowed: &[&str]) -> CliResult<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for p in params {
        let Some((key, value)) = p.split_once('=') else {
            return Err(Error::InvalidInput(format!(
                "expected key=value, got {p:?} (allowed keys: {})",
                allowed.join(", ")
            )));
        };
        if !allowed.contains(&key) {
            return Err(Error::InvalidInput(format!(
                "unknown key {key:?} (allowed: {})",
                allowed.join(", ")
            )));
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(Error::InvalidInput(format!("duplicate key {key:?}")));
        }
    }
    Ok(map)
}

fn required_usize(map: &BTreeMap<String, String>, key: &str) -> CliResult<usize> {
    let raw = map
        .get(key)
        .ok_or_else(|| Error::InvalidInput(format!("missing {key}=<integer>")))?;
    raw.parse()
        .map_err(|_| Error::InvalidInput(format!("{key}={raw:?} is not a non-negative integer")))
}

fn parse_profile(raw: &str) -> CliResult<ZetaProfile> {
    match raw {
        "real" => Ok(ZetaProfile::RealArchimedean),
        "global" => Ok(ZetaProfile::GlobalCompleted),
        other => {
            if let Some(q) = other.strip_prefix("padic:") {
                let q: u64 = q.parse().map_err(|_| {
                    Error::InvalidInput(format!("profile {other:?}: bad residue cardinality"))
                })?;
                ZetaProfile::p_adic(q)
            } else {
                Err(Error::InvalidInput(format!(
                    "unknown profile {other:?} (expected padic:<q>, real or global)"
                )))
            }
        }
    }
}

fn parse_window(raw: &str) -> CliResult<(Rat, Rat)> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidInput(format!(
            "window {raw:?} must be two comma-separated rationals"
        )));
    }
    let lo = parse_rat(parts[0])
        .ok_or_else(|| Error::InvalidInput(format!("bad window endpoint {:?}", parts[0])))?;
    let hi = parse_rat(parts[1])
        .ok_or_else(|| Error::InvalidInput(format!("bad window endpoint {:?}", parts[1])))?;
    Ok((lo, hi))
}

fn ledger_json(ledger: &PoleLedger) -> Value {
    json!(ledger
        .entries
        .iter()
        .map(|e| json!({"location": rat_string(e.location), "order": e.order}))
        .collect::<Vec<_>>())
}

fn render(envelope: &ReportEnvelope, format: Format, md: String) -> String {
    match format {
        Format::Json => envelope.to_json_string(),
        Format::Md => md,
    }
}

fn cmd_classify(tr: &TypeRank, format: Format) -> CliResult<String> {
    let rs = build_system(tr)?;
    let data = classify_abelian_parabolics(&rs);
    let mut rows_json = Vec::new();
    let mut rows_md = Vec::new();
    for pd in &data {
        let jd = jordan_invariants(pd)?;
        rows_json.push(json!({
            "node": pd.node(),
            "levi": pd.levi_label(),
            "dim_n": pd.nilradical_dim(),
            "r": jd.r,
            "d": jd.d,
            "kind": jd.coordinate_kind.as_str(),
        }));
        rows_md.push(vec![
            pd.node().to_string(),
            pd.levi_label(),
            pd.nilradical_dim().to_string(),
            jd.r.to_string(),
            if jd.r == 1 {
                "-".to_string()
            } else {
                jd.d.to_string()
            },
        ]);
    }
    let envelope = ReportEnvelope::new(
        "classify",
        json!({"type": rs.cartan_type().to_string()}),
        json!({"rows": rows_json}),
    );
    let mut md = format!("# {} abelian-radical parabolic nodes\n\n", rs.cartan_type());
    if data.is_empty() {
        md.push_str("none (no abelian-radical node is self-opposite)\n");
    } else {
        md.push_str(&markdown_table(
            &["node", "m^der", "dim N", "r", "d"],
            &rows_md,
        ));
    }
    Ok(render(&envelope, format, md))
}

fn pick_datum(rs: &RootSystem, node: Option<usize>) -> CliResult<ParabolicDatum> {
    match node {
        Some(j) => parabolic_datum(rs, j),
        None => {
            let data = classify_abelian_parabolics(rs);
            match data.len() {
                0 => Err(Error::InvalidInput(format!(
                    "{} has no abelian-radical self-opposite node",
                    rs.cartan_type()
                ))),
                1 => Ok(data.into_iter().next().unwrap()),
                _ => Err(Error::InvalidInput(format!(
                    "{} has several qualifying nodes ({}); pass --node",
                    rs.cartan_type(),
                    data.iter()
                        .map(|d| d.node().to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))),
            }
        }
    }
}

fn cmd_tower(tr: &TypeRank, node: Option<usize>, format: Format) -> CliResult<String> {
    let rs = build_system(tr)?;
    let pd = pick_datum(&rs, node)?;
    let tower = build_tower(&pd)?;
    let steps_json: Vec<Value> = tower
        .steps
        .iter()
        .map(|s| {
            json!({
                "type": s.cartan_type.to_string(),
                "node": s.node,
                "r": s.r,
                "d": s.d,
                "levi": s.levi_label,
            })
        })
        .collect();
    let envelope = ReportEnvelope::new(
        "tower",
        json!({"type": rs.cartan_type().to_string(), "node": pd.node()}),
        json!({"d": tower.d, "steps": steps_json}),
    );
    let rows_md: Vec<Vec<String>> = tower
        .steps
        .iter()
        .map(|s| {
            vec![
                s.cartan_type.to_string(),
                s.node.to_string(),
                s.r.to_string(),
                s.levi_label.clone(),
            ]
        })
        .collect();
    let mut md = format!(
        "# Tower from {} node {} (d = {})\n\n",
        rs.cartan_type(),
        pd.node(),
        tower.d
    );
    md.push_str(&format!("{}\n\n", tower.chain_labels().join(" -> ")));
    md.push_str(&markdown_table(&["group", "node", "r", "m^der"], &rows_md));
    Ok(render(&envelope, format, md))
}

#[allow(clippy::too_many_arguments)]
fn cmd_cfun(
    args: &[String],
    node: Option<usize>,
    method: Option<Method>,
    quaternionic: bool,
    profile_raw: &str,
    window_raw: &str,
    format: Format,
) -> CliResult<String> {
    let profile = parse_profile(profile_raw)?;
    let window = parse_window(window_raw)?;

    let mut methods: Vec<(&str, ZetaProduct)> = Vec::new();
    let inputs;
    let mut scope_note: Option<String> = None;

    if quaternionic {
        let map = kv_params(args, &["r"])?;
        let r = required_usize(&map, "r")?;
        if r < 1 {
            return Err(Error::InvalidInput("r must be at least 1".to_string()));
        }
        inputs =
            json!({"quaternionic": true, "r": r, "profile": profile_raw, "window": window_raw});
        match method {
            Some(Method::Gk) => {
                return Err(Error::InvalidInput(
                    "the inversion-set route needs a split group; use closed or restricted"
                        .to_string(),
                ))
            }
            Some(Method::Closed) => methods.push(("closed", quaternionic_closed_form(r))),
            Some(Method::Restricted) => methods.push(("restricted", quaternionic_restricted(r)?)),
            None => {
                methods.push(("closed", quaternionic_closed_form(r)));
                methods.push(("restricted", quaternionic_restricted(r)?));
            }
        }
    } else {
        if args.len() != 2 {
            return Err(Error::InvalidInput(
                "expected `cfun <FAMILY> <RANK>` or `cfun --quaternionic r=<R>`".to_string(),
            ));
        }
        let tr = TypeRank {
            family: args[0].clone(),
            rank: args[1]
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad rank {:?}", args[1])))?,
        };
        let rs = build_system(&tr)?;
        let pd = pick_datum(&rs, node)?;
        let jd = jordan_invariants(&pd)?;
        inputs = json!({
            "type": rs.cartan_type().to_string(),
            "node": pd.node(),
            "r": jd.r,
            "d": jd.d,
            "profile": profile_raw,
            "window": window_raw,
        });
        if !rs.cartan_type().is_simply_laced() {
            scope_note = Some(
                "outside the closed-form comparison: non-simply-laced type, the inversion-set \
                 product carries factors in 2s"
                    .to_string(),
            );
        }
        match method {
            Some(Method::Gk) => methods.push(("gk", gk_cfunction(&pd))),
            Some(Method::Closed) => methods.push(("closed", closed_form_c(jd.r, jd.d))),
            Some(Method::Restricted) => {
                methods.push(("restricted", quaternionic_restricted_for(jd.r, jd.d)?))
            }
            None => {
                methods.push(("gk", gk_cfunction(&pd)));
                methods.push(("closed", closed_form_c(jd.r, jd.d)));
            }
        }
    }

    let verdict = if methods.len() == 2 {
        Some(methods[0].1 == methods[1].1)
    } else {
        None
    };
    // The two quaternionic routes are independent computations of one
    // function; disagreement is a defect, not a report.
    if quaternionic && verdict == Some(false) {
        return Err(Error::Inconsistency(format!(
            "the closed form {} and the restricted factorization {} disagree",
            methods[0].1, methods[1].1
        )));
    }
    let ledger = full_ledger(&methods[0].1, &profile, window)?;

    let mut result = serde_json::Map::new();
    let mut methods_json = serde_json::Map::new();
    for (name, zp) in &methods {
        methods_json.insert(name.to_string(), json!(zp.canonical_string()));
    }
    result.insert("methods".to_string(), Value::Object(methods_json));
    if let Some(v) = verdict {
        result.insert(
            "verdict".to_string(),
            json!(format!("{} == {}: {}", methods[0].0, methods[1].0, v)),
        );
    }
    if let Some(note) = &scope_note {
        result.insert("scope_note".to_string(), json!(note));
    }
    result.insert("ledger".to_string(), ledger_json(&ledger));
    let envelope = ReportEnvelope::new("cfun", inputs, Value::Object(result));

    let mut md = String::from("# c-function\n\n");
    for (name, zp) in &methods {
        md.push_str(&format!("{name}: `{}`\n", zp.canonical_string()));
    }
    if let Some(v) = verdict {
        md.push_str(&format!(
            "\nverdict: {} == {}: {v}\n",
            methods[0].0, methods[1].0
        ));
    }
    if let Some(note) = &scope_note {
        md.push_str(&format!("\nnote: {note}\n"));
    }
    md.push_str(&format!(
        "\nledger ({profile_raw}, window [{}, {}]): {ledger}\n",
        rat_string(window.0),
        rat_string(window.1)
    ));
    Ok(render(&envelope, format, md))
}

/// The restricted route applies to the quaternionic short multiplicity only.
fn quaternionic_restricted_for(r: usize, d: usize) -> CliResult<ZetaProduct> {
    if d != 4 {
        return Err(Error::OutOfScope(format!(
            "the restricted rank-one route exists only for short multiplicity 4 (this node has d = {d})"
        )));
    }
    quaternionic_restricted(r)
}

fn cmd_reducibility(
    params: &[String],
    chi: CharacterClass,
    chi_d: ChiDTag,
    verify: bool,
    format: Format,
) -> CliResult<String> {
    let map = kv_params(params, &["r", "d"])?;
    let r = required_usize(&map, "r")?;
    let d = required_usize(&map, "d")?;
    let report = reducibility_points(r, d, chi_d, &chi)?;
    let inputs = json!({
        "r": r,
        "d": d,
        "chi": chi.as_str(),
        "chi_d": chi_d.as_str(),
    });
    let mut result = report.to_json();
    let mut verification_md = String::new();
    if verify {
        let consistency = verify_fj_consistency(r, d, chi_d)?;
        let witnesses: Vec<Value> = consistency
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "chi": w.chi.as_str(),
                    "from_rank": w.from_rank,
                    "carried": w.carried.iter().map(|x| rat_string(*x)).collect::<Vec<_>>(),
                    "target": w.target.iter().map(|x| rat_string(*x)).collect::<Vec<_>>(),
                    "ok": w.ok,
                })
            })
            .collect();
        result["descent_consistent"] = json!(consistency.consistent);
        result["descent_witnesses"] = json!(witnesses);
        verification_md = format!(
            "\ndescent consistency: {}\n{}",
            consistency.consistent,
            consistency
                .witnesses
                .iter()
                .map(|w| format!(
                    "- chi={} rank {} -> {}: carried {{{}}} into {{{}}} ({})\n",
                    w.chi.as_str(),
                    w.from_rank,
                    w.from_rank - 1,
                    w.carried
                        .iter()
                        .map(|x| rat_string(*x))
                        .collect::<Vec<_>>()
                        .join(", "),
                    w.target
                        .iter()
                        .map(|x| rat_string(*x))
                        .collect::<Vec<_>>()
                        .join(", "),
                    if w.ok { "ok" } else { "MISMATCH" },
                ))
                .collect::<String>()
        );
    }
    let envelope = ReportEnvelope::new("reducibility", inputs, result);
    let md = format!(
        "# Reducibility of I(chi, s), r = {r}, d = {d}, chi = {}, chi_D = {}\n\n{}\n{verification_md}",
        chi.as_str(),
        chi_d.as_str(),
        report
    );
    Ok(render(&envelope, format, md))
}

fn cmd_poles(
    params: &[String],
    chi_d: ChiDTag,
    hypotheses_ok: bool,
    format: Format,
) -> CliResult<String> {
    let map = kv_params(params, &["r", "d"])?;
    let r = required_usize(&map, "r")?;
    let d = required_usize(&map, "d")?;
    let report = global_pole_ledger(r, d, chi_d, hypotheses_ok)?;
    let poles_json: Vec<Value> = report
        .poles
        .iter()
        .map(|p| {
            json!({
                "s0": rat_string(p.location),
                "order": p.order,
                "residue": p.residue.as_str(),
            })
        })
        .collect();
    let rejected_json: Vec<Value> = report
        .rejected
        .iter()
        .map(|c| {
            json!({
                "s0": rat_string(c.location),
                "walls": c.walls.hits.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let envelope = ReportEnvelope::new(
        "poles",
        json!({"r": r, "d": d, "chi_d": chi_d.as_str(), "hypotheses_ok": hypotheses_ok}),
        json!({
            "r": r,
            "d": d,
            "poles": poles_json,
            "rejected": rejected_json,
            "note": report.note,
        }),
    );
    let rows: Vec<Vec<String>> = report
        .poles
        .iter()
        .map(|p| {
            let coords = chi_s_coords(r, d, p.location);
            vec![
                rat_string(p.location),
                p.order.to_string(),
                p.residue.as_str().to_string(),
                format!(
                    "({})",
                    coords
                        .coords
                        .iter()
                        .map(|x| rat_string(*x))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            ]
        })
        .collect();
    let mut md = format!("# Eisenstein poles, r = {r}, d = {d}\n\n");
    md.push_str(&format!(
        "rho = ({})\n\n",
        rho_coords(r, d)
            .iter()
            .map(|x| rat_string(*x))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    md.push_str(&markdown_table(
        &["s0", "order", "residue", "character coordinates"],
        &rows,
    ));
    if !report.rejected.is_empty() {
        md.push_str("\nwall-rejected candidates:\n");
        for c in &report.rejected {
            let walls: Vec<String> = c.walls.hits.iter().map(|h| h.to_string()).collect();
            md.push_str(&format!(
                "- s0 = {}: {}\n",
                rat_string(c.location),
                walls.join(", ")
            ));
        }
    }
    md.push_str(&format!("\nnote: {}\n", report.note));
    Ok(render(&envelope, format, md))
}

fn cmd_pyramid(params: &[String], format: Format) -> CliResult<String> {
    let map = kv_params(params, &["r", "i"])?;
    let r = required_usize(&map, "r")?;
    let i = required_usize(&map, "i")?;
    let report = jantzen_pyramid(r, i)?;
    let envelope = ReportEnvelope::new("pyramid", json!({"r": r, "i": i}), report.to_json());
    let mut md = format!(
        "# Pyramid r = {r}, i = {i}: {} cells, socle floor t = {}, co-socle floor t = {}\n\n",
        report.cell_count(),
        report.socle_floor,
        report.cosocle_floor
    );
    for (t, cells) in report.floors.iter().rev() {
        let tags: Vec<String> = cells.iter().map(|(p, q)| format!("V({p},{q})")).collect();
        let role = if *t == report.socle_floor {
            "  <- socle"
        } else if *t == report.cosocle_floor {
            "  <- co-socle"
        } else {
            ""
        };
        md.push_str(&format!("t = {t}: {}{role}\n", tags.join(" ")));
    }
    Ok(render(&envelope, format, md))
}

fn cmd_series(params: &[String], format: Format) -> CliResult<String> {
    let map = kv_params(params, &["q", "s", "terms"])?;
    let q: u64 = map
        .get("q")
        .ok_or_else(|| Error::InvalidInput("missing q=<prime power>".to_string()))?
        .parse()
        .map_err(|_| Error::InvalidInput("q must be a positive integer".to_string()))?;
    ZetaProfile::p_adic(q)?;
    let s_raw = map
        .get("s")
        .ok_or_else(|| Error::InvalidInput("missing s=<real>".to_string()))?;
    let s: f64 = match parse_rat(s_raw) {
        Some(r) => *r.numer() as f64 / *r.denom() as f64,
        None => s_raw
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad s value {s_raw:?}")))?,
    };
    let terms = match map.get("terms") {
        Some(raw) => raw
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad terms value {raw:?}")))?,
        None => 200,
    };
    let partial = sl2_quaternion_series(q, s, terms)?;
    let closed = sl2_quaternion_closed(q, s);
    let envelope = ReportEnvelope::new(
        "series",
        json!({"q": q, "s": s, "terms": terms}),
        json!({
            "partial_sum": sig12(partial),
            "closed_form": sig12(closed),
            "difference": sig12((partial - closed).abs()),
        }),
    );
    let md = format!(
        "# Rank-one expansion, q = {q}, s = {s}, {terms} terms\n\n\
         partial sum: {:.11e}\nclosed form: {:.11e}\n|difference|: {:.3e}\n",
        sig12(partial),
        sig12(closed),
        (partial - closed).abs()
    );
    Ok(render(&envelope, format, md))
}
