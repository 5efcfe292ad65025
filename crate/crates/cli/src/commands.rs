//! Implementations of the individual subcommands. Each one parses its
//! domain inputs, runs the library call, and prints in the selected format.
//! All take their output format explicitly; everything is deterministic
//! (patterns in pseudo-decimal order, components by representative).

use num_bigint::BigUint;
use serde_json::json;

use gopmap::{
    all_gops, census_with, count_gop, discretize, double_precision_cycle_with,
    enumerate_rigid_with, gop_of, orbit_report, rank, threshold, unrank, Denominator, Error,
    FunctionTable, Gop, GopCensus, GridSpec, MapSpec, OrbitStructure, Result, RigidSpec, Rounding,
    SweepOptions,
};

use crate::output::{approx, csv_row, join_elements, render_table, OutFormat};

/// Guard for `order`: 2^n − 1 rows get unwieldy fast.
const ORDER_GUARD: usize = 20;

pub fn analyze(literal: &str, out: OutFormat) -> Result<()> {
    let f: FunctionTable = literal.parse()?;
    let s = OrbitStructure::analyze(&f);
    let g = gop_of(&f);
    match out {
        OutFormat::Table => {
            println!("function: {f}");
            println!("gop: {g}");
            let rows: Vec<Vec<String>> = s
                .components()
                .iter()
                .map(|c| {
                    vec![
                        c.representative.to_string(),
                        c.period.to_string(),
                        kind(c.attractive).to_string(),
                        join_elements(&c.cycle),
                        join_elements(&c.basin),
                    ]
                })
                .collect();
            print!("{}", render_table(&["component", "period", "kind", "cycle", "basin"], &rows));
        }
        OutFormat::Csv => {
            println!("component,period,kind,cycle,basin");
            for c in s.components() {
                println!(
                    "{}",
                    csv_row(&[
                        c.representative.to_string(),
                        c.period.to_string(),
                        kind(c.attractive).to_string(),
                        join_elements(&c.cycle),
                        join_elements(&c.basin),
                    ])
                );
            }
        }
        OutFormat::Json => {
            let components: Vec<_> = s
                .components()
                .iter()
                .map(|c| {
                    json!({
                        "representative": c.representative,
                        "period": c.period,
                        "attractive": c.attractive,
                        "cycle": c.cycle,
                        "basin": c.basin,
                    })
                })
                .collect();
            print_json(&json!({
                "function": f.to_string(),
                "n": f.n(),
                "gop": g.to_string(),
                "components": components,
            }));
        }
    }
    Ok(())
}

pub fn gop(literal: &str, out: OutFormat) -> Result<()> {
    let f: FunctionTable = literal.parse()?;
    let g = gop_of(&f);
    match out {
        OutFormat::Table => println!("{g}"),
        OutFormat::Csv => {
            println!("gop");
            println!("{}", csv_row(&[g.to_string()]));
        }
        OutFormat::Json => print_json(&json!({
            "function": f.to_string(),
            "gop": g.to_string(),
        })),
    }
    Ok(())
}

pub fn rank_cmd(literal: &str, out: OutFormat) -> Result<()> {
    let f: FunctionTable = literal.parse()?;
    let r = rank(&f);
    match out {
        OutFormat::Table => println!("{}", r.value()),
        OutFormat::Csv => {
            println!("rank");
            println!("{}", r.value());
        }
        OutFormat::Json => print_json(&json!({
            "function": f.to_string(),
            "n": f.n(),
            "rank": r.value().to_string(),
        })),
    }
    Ok(())
}

pub fn unrank_cmd(n: usize, rank_text: &str, out: OutFormat) -> Result<()> {
    let r = parse_biguint(rank_text, "rank")?;
    let f = unrank(n, &r)?;
    match out {
        OutFormat::Table => println!("{f}"),
        OutFormat::Csv => {
            println!("function");
            println!("{}", csv_row(&[f.to_string()]));
        }
        OutFormat::Json => print_json(&json!({
            "n": n,
            "rank": r.to_string(),
            "function": f.to_string(),
        })),
    }
    Ok(())
}

pub fn threshold_cmd(literal: &str, out: OutFormat) -> Result<()> {
    let g: Gop = literal.parse()?;
    let f = threshold(&g);
    let r = rank(&f);
    match out {
        OutFormat::Table => {
            println!("{f}");
            println!("rank={}", r.value());
        }
        OutFormat::Csv => {
            println!("function,rank");
            println!("{}", csv_row(&[f.to_string(), r.value().to_string()]));
        }
        OutFormat::Json => print_json(&json!({
            "gop": g.to_string(),
            "function": f.to_string(),
            "rank": r.value().to_string(),
        })),
    }
    Ok(())
}

pub fn order(n: usize, force: bool, out: OutFormat) -> Result<()> {
    if n > ORDER_GUARD && !force {
        return Err(Error::GuardExceeded { n, limit: ORDER_GUARD });
    }
    let gops = all_gops(n)?;
    let row = |g: &Gop| {
        let modulus = g.modulus();
        let first = g.orders()[0];
        (g.to_string(), modulus, modulus - first)
    };
    match out {
        OutFormat::Table => {
            let rows: Vec<Vec<String>> = gops
                .iter()
                .map(|g| {
                    let (lit, m, tail) = row(g);
                    vec![lit, m.to_string(), tail.to_string()]
                })
                .collect();
            print!("{}", render_table(&["gop", "modulus", "modulus_minus_first"], &rows));
        }
        OutFormat::Csv => {
            println!("gop,modulus,modulus_minus_first");
            for g in &gops {
                let (lit, m, tail) = row(g);
                println!("{}", csv_row(&[lit, m.to_string(), tail.to_string()]));
            }
        }
        OutFormat::Json => {
            let rows: Vec<_> = gops
                .iter()
                .map(|g| {
                    let (lit, m, tail) = row(g);
                    json!({"gop": lit, "modulus": m, "modulus_minus_first": tail})
                })
                .collect();
            print_json(&json!({"n": n, "count": gops.len(), "gops": rows}));
        }
    }
    Ok(())
}

pub fn count(literal: &str, out: OutFormat) -> Result<()> {
    let g: Gop = literal.parse()?;
    let c = count_gop(&g);
    match out {
        OutFormat::Table => {
            println!("{c}");
            if let Some(a) = approx(&c) {
                println!("approx {a}");
            }
        }
        OutFormat::Csv => {
            println!("count");
            println!("{c}");
        }
        OutFormat::Json => print_json(&json!({
            "gop": g.to_string(),
            "count": c.to_string(),
        })),
    }
    Ok(())
}

/// `--filter rigid:<alphas>:<q>`, e.g. `rigid:20,9,5,2,1:66`.
fn parse_filter(text: &str) -> Result<RigidSpec> {
    let mut parts = text.splitn(3, ':');
    let head = parts.next().unwrap_or("");
    if head != "rigid" {
        return Err(Error::Parse {
            at: 0,
            msg: format!("unknown filter kind {head:?}; expected rigid:<alphas>:<q>"),
        });
    }
    let (Some(alphas_text), Some(q_text)) = (parts.next(), parts.next()) else {
        return Err(Error::Parse {
            at: text.len(),
            msg: "filter needs three colon-separated parts: rigid:<alphas>:<q>".into(),
        });
    };
    let alphas = parse_alphas(alphas_text)?;
    let q = q_text.parse::<u64>().map_err(|e| Error::Parse {
        at: text.len() - q_text.len(),
        msg: format!("bad threshold {q_text:?}: {e}"),
    })?;
    RigidSpec::new(alphas, q)
}

fn parse_alphas(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse { at: 0, msg: format!("bad weight {part:?}: {e}") })
        })
        .collect()
}

fn parse_biguint(text: &str, what: &str) -> Result<BigUint> {
    text.trim()
        .parse::<BigUint>()
        .map_err(|e| Error::Parse { at: 0, msg: format!("bad {what} {text:?}: {e}") })
}

/// Census rows in pseudo-decimal order.
fn census_rows(census: &GopCensus) -> Vec<(String, String)> {
    census.counts().iter().map(|(g, c)| (g.to_string(), c.to_string())).collect()
}

fn print_census(census: &GopCensus, out: OutFormat, json_extra: serde_json::Value) {
    let rows = census_rows(census);
    match out {
        OutFormat::Table => {
            let table_rows: Vec<Vec<String>> =
                rows.iter().map(|(g, c)| vec![g.clone(), c.clone()]).collect();
            print!("{}", render_table(&["gop", "count"], &table_rows));
            println!("total: {}", census.total());
        }
        OutFormat::Csv => {
            println!("gop,count");
            for (g, c) in &rows {
                println!("{}", csv_row(&[g.clone(), c.clone()]));
            }
        }
        OutFormat::Json => {
            let counts: Vec<_> = rows.iter().map(|(g, c)| json!({"gop": g, "count": c})).collect();
            let mut doc = json_extra;
            doc["n"] = json!(census.n());
            doc["total"] = json!(census.total().to_string());
            doc["counts"] = json!(counts);
            print_json(&doc);
        }
    }
}

pub struct SweepArgs {
    pub jobs: usize,
    pub partitions: Option<usize>,
    pub force: bool,
    pub progress: bool,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            partitions: self.partitions.unwrap_or(self.jobs).max(1),
            jobs: self.jobs.max(1),
            force: self.force,
        }
    }
}

fn stderr_progress(label: &'static str) -> impl Fn(usize, usize) + Sync {
    move |done, total| eprintln!("progress: {label} {done}/{total}")
}

pub fn enumerate(
    n: usize,
    filter_text: Option<&str>,
    sweep: &SweepArgs,
    out: OutFormat,
) -> Result<()> {
    let spec = filter_text.map(parse_filter).transpose()?;
    let filter = spec.as_ref().map(|s| {
        Box::new(move |images: &[usize]| s.accepts(images)) as Box<dyn Fn(&[usize]) -> bool + Sync>
    });
    let progress = stderr_progress("partition");
    let census = census_with(
        n,
        filter.as_deref(),
        &sweep.options(),
        sweep.progress.then_some(&progress as &(dyn Fn(usize, usize) + Sync)),
    )?;
    print_census(&census, out, json!({"filter": filter_text.map(str::to_string)}));
    Ok(())
}

pub fn rigid(n: usize, alphas_text: &str, q: u64, sweep: &SweepArgs, out: OutFormat) -> Result<()> {
    let spec = RigidSpec::new(parse_alphas(alphas_text)?, q)?;
    let progress = stderr_progress("root");
    let census = enumerate_rigid_with(
        n,
        &spec,
        &sweep.options(),
        sweep.progress.then_some(&progress as &(dyn Fn(usize, usize) + Sync)),
    )?;
    let summary = [
        q.to_string(),
        census.max_period().to_string(),
        census.max_modulus().to_string(),
        census.counts().len().to_string(),
        census.total().to_string(),
    ];
    match out {
        OutFormat::Table => {
            let rows: Vec<Vec<String>> =
                census_rows(&census).into_iter().map(|(g, c)| vec![g, c]).collect();
            print!("{}", render_table(&["gop", "count"], &rows));
            println!(
                "q={} max_period={} max_modulus={} gops={} functions={}",
                summary[0], summary[1], summary[2], summary[3], summary[4]
            );
        }
        OutFormat::Csv => {
            println!("gop,count");
            for (g, c) in census_rows(&census) {
                println!("{}", csv_row(&[g, c]));
            }
            println!();
            println!("q,max_period,max_modulus,gop_count,function_count");
            println!("{}", csv_row(&summary));
        }
        OutFormat::Json => {
            let counts: Vec<_> =
                census_rows(&census).iter().map(|(g, c)| json!({"gop": g, "count": c})).collect();
            print_json(&json!({
                "n": n,
                "alphas": spec.alphas(),
                "q": q,
                "max_period": census.max_period(),
                "max_modulus": census.max_modulus(),
                "gop_count": census.counts().len(),
                "function_count": census.total().to_string(),
                "counts": counts,
            }));
        }
    }
    Ok(())
}

pub fn parse_map(map_name: &str, ell: Option<f64>) -> Result<MapSpec> {
    match map_name {
        "logistic" => {
            if ell.is_some() {
                return Err(Error::InvalidParameter("--ell only applies to the tent map".into()));
            }
            Ok(MapSpec::logistic())
        }
        "tent" => MapSpec::tent_pow(ell.unwrap_or(1.0)),
        other => Err(Error::Parse {
            at: 0,
            msg: format!("unknown map {other:?}; expected logistic or tent"),
        }),
    }
}

fn parse_denominator(text: &str) -> Result<Denominator> {
    match text {
        "n" => Ok(Denominator::N),
        "n-1" => Ok(Denominator::NMinusOne),
        other => Err(Error::Parse {
            at: 0,
            msg: format!("unknown denominator {other:?}; expected n or n-1"),
        }),
    }
}

fn parse_rounding(text: &str) -> Result<Rounding> {
    match text {
        "floor" => Ok(Rounding::Floor),
        "half-up" => Ok(Rounding::HalfUp),
        "half-down" => Ok(Rounding::HalfDown),
        other => Err(Error::Parse {
            at: 0,
            msg: format!("unknown rounding {other:?}; expected floor, half-up, or half-down"),
        }),
    }
}

pub fn discretize_cmd(
    map_name: &str,
    ell: Option<f64>,
    n: usize,
    denominator: &str,
    rounding: &str,
    out: OutFormat,
) -> Result<()> {
    let map = parse_map(map_name, ell)?;
    let grid = GridSpec::new(n, parse_denominator(denominator)?, parse_rounding(rounding)?)?;
    let f = discretize(&map, &grid);
    let s = orbit_report(&map, &grid);
    let cycle_rows: Vec<(usize, String, usize, &'static str)> = s
        .components()
        .iter()
        .map(|c| (c.period, join_elements(&c.cycle), c.basin.len(), kind(c.attractive)))
        .collect();
    match out {
        OutFormat::Table => {
            println!(
                "map: {}  grid: j/{} on {} points  rounding: {}",
                map_label(&map),
                grid.divisor(),
                n,
                rounding
            );
            let rows: Vec<Vec<String>> = cycle_rows
                .iter()
                .map(|(p, cyc, b, k)| {
                    vec![p.to_string(), cyc.clone(), b.to_string(), k.to_string()]
                })
                .collect();
            print!("{}", render_table(&["period", "cycle", "basin_size", "kind"], &rows));
        }
        OutFormat::Csv => {
            println!("period,cycle,basin_size,kind");
            for (p, cyc, b, k) in &cycle_rows {
                println!(
                    "{}",
                    csv_row(&[p.to_string(), cyc.clone(), b.to_string(), k.to_string()])
                );
            }
        }
        OutFormat::Json => {
            let cycles: Vec<_> = s
                .components()
                .iter()
                .map(|c| {
                    json!({
                        "period": c.period,
                        "cycle": c.cycle,
                        "basin_size": c.basin.len(),
                        "attractive": c.attractive,
                    })
                })
                .collect();
            print_json(&json!({
                "map": map_label(&map),
                "n": n,
                "denominator": denominator,
                "rounding": rounding,
                "function": f.to_string(),
                "cycles": cycles,
            }));
        }
    }
    Ok(())
}

pub fn dpcycle(
    map_name: &str,
    ell: Option<f64>,
    seeds: usize,
    rng_seed: u64,
    jobs: usize,
    out: OutFormat,
) -> Result<()> {
    let map = parse_map(map_name, ell)?;
    let classes = double_precision_cycle_with(&map, seeds, rng_seed, jobs.max(1));
    match out {
        OutFormat::Table => {
            let rows: Vec<Vec<String>> = classes
                .iter()
                .map(|c| {
                    vec![
                        c.length.to_string(),
                        format!("{:?}", c.representative),
                        c.hits.to_string(),
                    ]
                })
                .collect();
            print!("{}", render_table(&["length", "representative", "hits"], &rows));
            println!("cycles: {}  seeds: {seeds}", classes.len());
        }
        OutFormat::Csv => {
            println!("length,representative,hits");
            for c in &classes {
                println!(
                    "{}",
                    csv_row(&[
                        c.length.to_string(),
                        format!("{:?}", c.representative),
                        c.hits.to_string(),
                    ])
                );
            }
        }
        OutFormat::Json => {
            let cycles: Vec<_> = classes
                .iter()
                .map(|c| json!({"length": c.length, "representative": c.representative, "hits": c.hits}))
                .collect();
            print_json(&json!({
                "map": map_label(&map),
                "seeds": seeds,
                "rng_seed": rng_seed,
                "cycles": cycles,
            }));
        }
    }
    Ok(())
}

fn map_label(map: &MapSpec) -> String {
    match map {
        MapSpec::Logistic => "logistic".into(),
        MapSpec::TentPow { ell } => format!("tent^{ell}"),
    }
}

fn kind(attractive: bool) -> &'static str {
    if attractive {
        "attractive"
    } else {
        "repulsive"
    }
}

fn print_json(doc: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("document serializes"));
}
