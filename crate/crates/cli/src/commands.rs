use std::collections::BTreeSet;
use std::fmt::Write;
use std::io::Read;

use kzmc_core::blowup::{local_residues, BlowupChart, IntPolynomial};
use kzmc_core::generate::{self, GENERATOR_VERSION};
use kzmc_core::kz::KzSystem;
use kzmc_core::labels::parse_set_list;
use kzmc_core::linalg::rational::parse_rational;
use kzmc_core::midconv::{middle_convolution_at, verify_mc};
use kzmc_core::tournament::{count_sequences, enumerate_families, render_family, LoserMap, MaximalCommutingFamily, RenderFormat};
use kzmc_core::{Error, LabelSet};

use crate::{BlowupArgs, Command, Failure, Format, GenKind, InputArgs};

type Outcome = Result<(), Failure>;

pub fn run(command: &Command, out: &mut String) -> Outcome {
    match command {
        Command::Counts { n_max, format } => counts(*n_max, *format, out),
        Command::Families { n, contains, shortened, format } => families(*n, contains.as_deref(), *shortened, *format, out),
        Command::Check(input) => check(input, out),
        Command::Spectra { input, shortened, format } => {
            let report = load(input)?.spectra(*shortened)?;
            match format {
                Format::Json => json(&report, out),
                _ => out.push_str(&report.to_string()),
            }
            Ok(())
        }
        Command::Mc { input, mu, var } => {
            let sys = load(input)?;
            let result = middle_convolution_at(&sys, *var, &parse_rational(mu)?)?;
            out.push_str(&result.to_json_pretty());
            out.push('\n');
            Ok(())
        }
        Command::VerifyMc { input, mu, format } => verify(input, mu, *format, out),
        Command::Blowup(args) => blowup(args, out),
        Command::Render { family, n, winner, format } => {
            let family = parse_family(family, *n)?;
            let format = match format {
                Format::Tex => RenderFormat::Tex,
                Format::Ascii => RenderFormat::Ascii,
                Format::Json => return Err(Failure::Usage("render supports --format ascii or tex".into())),
            };
            if let Some(w) = winner.filter(|w| !family.labels().contains(*w)) {
                return Err(Error::Domain(format!("winner {w} is not a label of {family}")).into());
            }
            out.push_str(&render_family(&family, *winner, format));
            Ok(())
        }
        Command::Gen { kind, n, seed, steps, max_rank } => {
            let mut rng = generate::rng(*seed);
            let sys = match kind {
                GenKind::Rank1 => generate::rank_one(*n, &mut rng)?,
                GenKind::McTower => generate::mc_tower(*n, *steps, *max_rank, &mut rng)?.0,
            };
            eprintln!("generator v{GENERATOR_VERSION}, seed {seed}");
            out.push_str(&sys.to_json_pretty());
            out.push('\n');
            Ok(())
        }
    }
}

fn read_input(input: &InputArgs) -> Result<String, Failure> {
    let text = input.input.trim_start();
    if text.starts_with('{') {
        return Ok(input.input.clone());
    }
    if input.input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(&input.input).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.input)))
}

fn load(input: &InputArgs) -> Result<KzSystem, Failure> {
    Ok(KzSystem::from_json(&read_input(input)?)?)
}

fn parse_family(text: &str, n: Option<u32>) -> Result<MaximalCommutingFamily, Failure> {
    Ok(match n {
        Some(n) => MaximalCommutingFamily::parse(text, LabelSet::range(n))?,
        None => MaximalCommutingFamily::parse_full(text)?,
    })
}

fn json(value: &impl serde::Serialize, out: &mut String) {
    out.push_str(&serde_json::to_string_pretty(value).expect("serializable"));
    out.push('\n');
}

fn counts(n_max: usize, format: Format, out: &mut String) -> Outcome {
    let rows = count_sequences(n_max)?;
    match format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n,
                        "patterns": r.patterns.to_string(),
                        "win_types": r.win_types.to_string(),
                        "types": r.types.to_string(),
                        "tournaments": r.tournaments.to_string(),
                    })
                })
                .collect();
            json(&rows, out);
        }
        Format::Tex => {
            out.push_str("\\begin{tabular}{r|rrrr}\n$n$ & patterns & win types & types & tournaments \\\\\n\\hline\n");
            for r in &rows {
                let _ = writeln!(out, "{} & {} & {} & {} & {} \\\\", r.n, r.patterns, r.win_types, r.types, r.tournaments);
            }
            out.push_str("\\end{tabular}\n");
        }
        Format::Ascii => {
            let _ = writeln!(out, "{:>3} {:>10} {:>10} {:>10} {:>12}", "n", "patterns", "win_types", "types", "tournaments");
            for r in &rows {
                let _ = writeln!(out, "{:>3} {:>10} {:>10} {:>10} {:>12}", r.n, r.patterns, r.win_types, r.types, r.tournaments);
            }
        }
    }
    Ok(())
}

fn families(n: u32, contains: Option<&str>, shortened: bool, format: Format, out: &mut String) -> Outcome {
    let required = contains.map(parse_set_list).transpose()?.unwrap_or_default();
    let list: Vec<String> = enumerate_families(LabelSet::range(n))?
        .into_iter()
        .filter(|f| required.iter().all(|&s| f.contains(s)))
        .map(|f| f.serialize(shortened))
        .collect();
    match format {
        Format::Json => json(&list, out),
        Format::Ascii => list.iter().for_each(|f| {
            let _ = writeln!(out, "{f}");
        }),
        Format::Tex => return Err(Failure::Usage("families supports --format ascii or json".into())),
    }
    Ok(())
}

fn check(input: &InputArgs, out: &mut String) -> Outcome {
    let sys = KzSystem::parse_json(&read_input(input)?)?;
    let violations = sys.integrability_violations();
    let _ = writeln!(out, "n = {}, rank = {}", sys.n(), sys.rank());
    if violations.is_empty() {
        out.push_str("integrable\n");
        return Ok(());
    }
    for v in &violations {
        let _ = writeln!(out, "violation: {v}");
    }
    Err(Error::Integrability(format!("{} relation(s) fail", violations.len())).into())
}

fn verify(input: &InputArgs, mu: &str, format: Format, out: &mut String) -> Outcome {
    let sys = load(input)?;
    let checks = verify_mc(&sys, &parse_rational(mu)?)?;
    match format {
        Format::Json => json(&checks, out),
        _ => {
            for c in &checks {
                if c.details.is_empty() {
                    let _ = writeln!(out, "{}  {}", c.family, c.status);
                } else {
                    let _ = writeln!(out, "{}  {}  {}", c.family, c.status, c.details);
                }
            }
        }
    }
    match checks.iter().filter(|c| !c.ok()).count() {
        0 => Ok(()),
        k => Err(Failure::Violations(k)),
    }
}

fn blowup(args: &BlowupArgs, out: &mut String) -> Outcome {
    let system = args.input.as_ref().map(|i| load(&InputArgs { input: i.clone() })).transpose()?;
    let n = args.n.or(system.as_ref().map(|s| s.n() as u32));
    let family = parse_family(&args.family, n)?;
    let flipped: BTreeSet<LabelSet> = args.flip.as_deref().map(parse_set_list).transpose()?.unwrap_or_default().into_iter().collect();
    let chart = BlowupChart::with_orientation(&LoserMap::canonical(&family, 0)?, &flipped)?;
    let residues = system.as_ref().map(|s| local_residues(s, &chart)).transpose()?;
    match args.format {
        Format::Json => {
            let mut value = chart.to_json();
            if let Some(res) = &residues {
                let matrices: serde_json::Map<_, _> = res
                    .iter()
                    .enumerate()
                    .map(|(v, (_, m))| (IntPolynomial::var_name(v), serde_json::to_value(m).expect("serializable")))
                    .collect();
                value["residue_matrices"] = matrices.into();
            }
            json(&value, out);
        }
        Format::Tex => out.push_str(&chart.to_tex()),
        Format::Ascii => {
            for p in chart.pairs() {
                let mono: Vec<String> = p.monomial.iter().map(|&v| IntPolynomial::var_name(v)).collect();
                let mono = if mono.is_empty() { String::new() } else { format!(" * {}", mono.join("*")) };
                let _ = writeln!(out, "x{} - x{} = ({}){mono}", p.j, p.i, p.poly);
            }
            for (v, m) in chart.variables().iter().enumerate() {
                let _ = writeln!(out, "{} -> A_{m}", IntPolynomial::var_name(v));
                if let Some(res) = &residues {
                    let _ = writeln!(out, "{}", res[v].1);
                }
            }
        }
    }
    Ok(())
}
