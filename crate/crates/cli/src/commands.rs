use crate::input::{optional_range, range, CmdResult, Failure, Inputs};
use crate::{ChainArgs, Cli, Command, IndexArgs, Method, RootsArgs, TarskiArgs, VerifyArgs};
use cindex_core::cauchy::{
    index_real_line, index_sturm, index_subres, index_variation, index_w_baseline,
};
use cindex_core::oracle::{
    run_batch_sequential, run_differential, BatchSummary, EndpointMode, GenConfig, Instance,
    InstanceRecord, Verdict,
};
use cindex_core::queries::{count_real_roots, squarefree_part, tarski_query, Range, TarskiResult};
use cindex_core::sequences::{subresultant_chain, subresultants_det};
use cindex_core::{Error, HalfInt, Poly, Rat, Sign};
use serde::Serialize;
use serde_json::json;
use std::time::Instant;

type Engine = fn(&Poly, &Poly, &Rat, &Rat) -> cindex_core::Result<HalfInt>;

const ENGINES: [(&str, Engine); 4] = [
    ("sturm", index_sturm),
    ("subres", index_subres),
    ("variation", index_variation),
    ("w", index_w_baseline),
];

pub fn run(cli: &Cli) -> CmdResult {
    let inputs = Inputs::new();
    match &cli.command {
        Command::Index(args) => index(&inputs, args, cli.json),
        Command::Chain(args) => chain(&inputs, args, cli.json),
        Command::Roots(args) => roots(&inputs, args, cli.json),
        Command::Tarski(args) => tarski(&inputs, args, cli.json),
        Command::Verify(args) => verify(&inputs, args),
    }
}

/// `println!` that treats a closed stdout (`cindex verify | head`) as a normal stop.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut stdout = std::io::stdout().lock();
        if let Err(e) = writeln!(stdout, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

fn print_json(value: &impl Serialize) {
    out!("{}", serde_json::to_string(value).expect("serializable"));
}

#[derive(Serialize)]
struct MethodRecord {
    value_doubled: Option<i64>,
    method: &'static str,
    agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    interval: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

struct Run {
    method: &'static str,
    interval: Option<[String; 2]>,
    result: cindex_core::Result<HalfInt>,
}

fn index(inputs: &Inputs, args: &IndexArgs, json: bool) -> CmdResult {
    let q = inputs.poly("--num", &args.num)?;
    let p = inputs.poly("--den", &args.den)?;
    let range = range(&args.from, &args.to)?;

    let selected: Vec<(&'static str, Engine)> = match args.method {
        Method::All => ENGINES.to_vec(),
        m => ENGINES
            .iter()
            .copied()
            .filter(|(name, _)| *name == method_name(m))
            .collect(),
    };
    let mut runs = Vec::new();
    match &range {
        Range::Interval(a, b) => {
            for (method, engine) in selected {
                runs.push(Run {
                    method,
                    interval: None,
                    result: engine(&q, &p, a, b),
                });
            }
        }
        Range::RealLine => {
            runs.push(Run {
                method: "real-line",
                interval: None,
                result: index_real_line(&q, &p),
            });
            if args.method == Method::All {
                // beyond every root of P the interval engines see the whole line
                let r = p.cauchy_root_bound().ok_or(Error::ZeroPolynomial)?
                    + Rat::from_integer(1.into());
                let (a, b) = (-r.clone(), r);
                for (method, engine) in selected {
                    runs.push(Run {
                        method,
                        interval: Some([a.to_string(), b.to_string()]),
                        result: engine(&q, &p, &a, &b),
                    });
                }
            }
        }
    }

    if args.method != Method::All || runs.iter().all(|r| r.result.is_err()) {
        let run = runs.into_iter().next().expect("at least one engine");
        let value = run.result?;
        if json {
            print_json(&MethodRecord {
                value_doubled: Some(value.doubled()),
                method: run.method,
                agrees: None,
                interval: None,
                skipped: None,
            });
        } else {
            out!("{value}");
        }
        return Ok(());
    }

    let values: Vec<HalfInt> = runs.iter().filter_map(|r| r.result.clone().ok()).collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let consensus = values[0];
    let records: Vec<MethodRecord> = runs
        .into_iter()
        .map(|r| match r.result {
            Ok(v) => MethodRecord {
                value_doubled: Some(v.doubled()),
                method: r.method,
                agrees: Some(v == consensus && agree),
                interval: r.interval,
                skipped: None,
            },
            Err(e) => MethodRecord {
                value_doubled: None,
                method: r.method,
                agrees: None,
                interval: r.interval,
                skipped: Some(e.to_string()),
            },
        })
        .collect();
    let verdict = if agree { "agree" } else { "disagree" };
    if json {
        print_json(&json!({ "results": records, "verdict": verdict }));
    } else {
        for rec in &records {
            let shown = match (&rec.value_doubled, &rec.skipped) {
                (Some(d), _) => HalfInt::from_doubled(*d).to_string(),
                (None, Some(why)) => format!("skipped ({why})"),
                (None, None) => unreachable!(),
            };
            match &rec.interval {
                Some([a, b]) => out!("{:<10} {shown}  on [{a}, {b}]", rec.method),
                None => out!("{:<10} {shown}", rec.method),
            }
        }
        out!("{}", verdict.to_uppercase());
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Sturm => "sturm",
        Method::Subres => "subres",
        Method::Variation => "variation",
        Method::W => "w",
        Method::All => "all",
    }
}

fn sign_cell(s: Option<Sign>) -> String {
    s.map_or_else(|| "-".to_string(), |s| s.to_string())
}

fn chain(inputs: &Inputs, args: &ChainArgs, json: bool) -> CmdResult {
    let p = inputs.poly("--p", &args.p)?;
    let q = inputs.poly("--q", &args.q)?;
    let chain = subresultant_chain(&p, &q)?;
    let s = chain.s();
    let side = |v: &[Sign], i: usize| (1..s).contains(&i).then(|| v[i - 1]);

    let checks = if args.check_det {
        let det = subresultants_det(&p, &q)?;
        let rec = chain.subresultants();
        Some(det.into_iter().zip(rec).enumerate().collect::<Vec<_>>())
    } else {
        None
    };
    let all_pass = checks
        .as_ref()
        .is_none_or(|c| c.iter().all(|(_, (d, r))| d == r));

    if json {
        let rows: Vec<_> = (0..=s)
            .map(|i| {
                json!({
                    "i": i,
                    "d": chain.degrees()[i],
                    "T": chain.t_poly(i).to_string(),
                    "t": chain.lead(i).to_string(),
                    "sres": chain.sres(i).to_string(),
                    "sigma": side(chain.sigma(), i).map(Sign::to_i64),
                    "tau": side(chain.tau(), i).map(Sign::to_i64),
                    "theta": chain.theta().get(i).map(|t| t.to_i64()),
                    "p": chain.pmap()[i],
                })
            })
            .collect();
        let checks: Option<Vec<_>> = checks.as_ref().map(|c| {
            c.iter()
                .map(|(j, (d, r))| {
                    json!({ "j": j, "det": d.to_string(), "chain": r.to_string(), "pass": d == r })
                })
                .collect()
        });
        print_json(&json!({ "rows": rows, "check_det": checks }));
    } else {
        let header = [
            "i",
            "d_i",
            "T_i",
            "t_i",
            "sRes_{d_i}",
            "sigma_i",
            "tau_i",
            "theta_i",
            "p(i)",
        ];
        let mut table = vec![header.map(String::from).to_vec()];
        for i in 0..=s {
            table.push(vec![
                i.to_string(),
                chain.degrees()[i].to_string(),
                chain.t_poly(i).to_string(),
                chain.lead(i).to_string(),
                chain.sres(i).to_string(),
                sign_cell(side(chain.sigma(), i)),
                sign_cell(side(chain.tau(), i)),
                sign_cell(chain.theta().get(i).copied()),
                chain.pmap()[i].to_string(),
            ]);
        }
        print_table(&table);
        if let Some(checks) = &checks {
            out!();
            for (j, (d, r)) in checks {
                if d == r {
                    out!("sResP_{j} = {d}  PASS");
                } else {
                    out!("sResP_{j} = {d}  FAIL (chain gives {r})");
                }
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

fn print_table(rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out!("{}", cells.join("  ").trim_end());
    }
}

fn print_query(method: &str, r: &TarskiResult, extra: Option<(&str, String)>, json: bool) {
    if json {
        let mut obj = json!({
            "value_doubled": r.index.doubled(),
            "method": method,
            "agrees": null,
            "value": r.value(),
            "boundary": r.boundary,
        });
        if let Some((k, v)) = extra {
            obj[k] = v.into();
        }
        print_json(&obj);
        return;
    }
    if let Some((k, v)) = extra {
        out!("{k}: {v}");
    }
    match r.value() {
        Some(v) => out!("{v}"),
        None => out!("{} (an endpoint is a root of P)", r.index),
    }
}

fn roots(inputs: &Inputs, args: &RootsArgs, json: bool) -> CmdResult {
    let mut p = inputs.poly("--poly", &args.poly)?;
    let range = optional_range(args.from.as_deref(), args.to.as_deref())?;
    let mut extra = None;
    if args.squarefree {
        p = squarefree_part(&p)?;
        extra = Some(("squarefree", p.to_string()));
    }
    let r = count_real_roots(&p, &range)?;
    print_query("roots", &r, extra, json);
    Ok(())
}

fn tarski(inputs: &Inputs, args: &TarskiArgs, json: bool) -> CmdResult {
    let q = inputs.poly("--q", &args.q)?;
    let p = inputs.poly("--p", &args.p)?;
    let range = optional_range(args.from.as_deref(), args.to.as_deref())?;
    let r = tarski_query(&q, &p, &range)?;
    print_query("tarski", &r, None, json);
    Ok(())
}

fn replay_record(inputs: &Inputs, arg: &str) -> CmdResult<InstanceRecord> {
    let text = inputs.text(arg)?;
    let text = if text.trim_start().starts_with('{') {
        text
    } else {
        std::fs::read_to_string(text.trim())
            .map_err(|e| Failure::Usage(format!("--replay {}: {e}", text.trim())))?
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Failure::Usage("--replay: empty record".into()))?;
    let bad = |e: serde_json::Error| Failure::Usage(format!("--replay: {e}"));
    let value: serde_json::Value = serde_json::from_str(line).map_err(bad)?;
    let value = value.get("instance").cloned().unwrap_or(value);
    serde_json::from_value(value).map_err(bad)
}

fn verify(inputs: &Inputs, args: &VerifyArgs) -> CmdResult {
    if args.count == 0 {
        return Err(Failure::Usage("--count must be at least 1".into()));
    }
    let cfg = GenConfig {
        max_deg_p: args.max_deg,
        max_mult: args.max_mult,
        coeff_bound: args.coeff_bound,
        endpoint_mode: args
            .endpoint_mode
            .as_deref()
            .map(str::parse::<EndpointMode>)
            .transpose()?,
    };

    let (reports, summary) = if let Some(arg) = &args.replay {
        let inst = Instance::from_record(&replay_record(inputs, arg)?)?;
        let start = Instant::now();
        let reports = vec![run_differential(&inst)];
        let summary = BatchSummary::from_reports(&reports, start.elapsed().as_millis() as u64);
        (reports, summary)
    } else {
        let batch = if args.sequential {
            run_batch_sequential(args.seed, args.count, &cfg)?
        } else {
            parallel_batch(args.seed, args.count, &cfg)?
        };
        (batch.reports, batch.summary)
    };

    for report in reports
        .iter()
        .filter(|r| !args.failures_only || r.verdict == Verdict::Disagree)
    {
        print_json(report);
    }
    print_json(&json!({ "summary": summary }));
    if summary.disagree == 0 {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

#[cfg(feature = "parallel")]
fn parallel_batch(
    seed: u64,
    count: usize,
    cfg: &GenConfig,
) -> cindex_core::Result<cindex_core::oracle::Batch> {
    cindex_core::oracle::run_batch_parallel(seed, count, cfg)
}

#[cfg(not(feature = "parallel"))]
fn parallel_batch(
    seed: u64,
    count: usize,
    cfg: &GenConfig,
) -> cindex_core::Result<cindex_core::oracle::Batch> {
    run_batch_sequential(seed, count, cfg)
}
