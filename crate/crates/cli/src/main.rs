//! permtab: permutation tableaux, bijections, statistics, enumeration.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use permtab::bijections::{phi, phi_inverse, psi, psi_inverse};
use permtab::enumeration::{
    carlitz_b, d_k_series, d_kn, e_hat, e_hat_cf_series, e_hat_gf_series, e_kn_closed,
    lattice_path_d,
};
use permtab::partition::Partition;
use permtab::perm::Permutation;
use permtab::polyalg::{MPoly, TruncatedSeries};
use permtab::statistics::{
    alignments_crossings, count_vincular, mak, tableau_stats, StatBundle, VincularPattern,
};
use permtab::tableau::PermutationTableau;
use permtab::verify::{run_check, CHECK_NAMES, MAX_BOUND};

#[derive(Parser)]
#[command(name = "permtab")]
#[command(about = "Permutation tableaux: bijections, statistics, exact enumeration")]
struct Cli {
    /// Output format (stats always emit JSON; dist emits CSV)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Map a tableau (text format file) to its permutation
    Phi { tableau_file: String },
    /// Map a permutation to its tableau (text format)
    PhiInv {
        #[arg(required = true)]
        perm: Vec<String>,
    },
    /// Map a permutation to its weak-excedance companion
    Psi {
        #[arg(required = true)]
        perm: Vec<String>,
    },
    /// Invert psi
    PsiInv {
        #[arg(required = true)]
        perm: Vec<String>,
    },
    /// Statistic dumps (JSON)
    #[command(subcommand)]
    Stats(StatsCommand),
    /// Count occurrences of a vincular pattern, e.g. 2-31
    CountPattern {
        perm: String,
        pattern: String,
    },
    /// Exact polynomials
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Truncated generating functions
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Exhaustive theorem checks; exit code is nonzero iff a theorem
    /// check fails (conjecture refutations never fail the exit code)
    Verify {
        /// One of: excedance-transport, psi-equations, pattern-transport,
        /// pattern-distribution, essential-ones, identities
        check: String,
        #[arg(long, default_value_t = permtab::verify::DEFAULT_BOUND)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Joint distribution of permutation statistics over S_n (CSV)
    Dist {
        /// Comma-separated statistics: wex, des, maj, mak, a, b, c, aee,
        /// ann, aen, ane, cee, cnn, lr, cycles, or a vincular pattern
        stats: String,
        #[arg(long)]
        n: usize,
        /// Emit CSV (the default; kept for scripting clarity)
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum StatsCommand {
    /// Full statistic bundle of a permutation
    Perm {
        #[arg(required = true)]
        perm: Vec<String>,
    },
    /// Cell statistics of a tableau file
    Tab { tableau_file: String },
}

#[derive(Subcommand)]
enum PolyCommand {
    /// F_shape(p,q): valid fillings by zero/one count, e.g. `poly F 3,2,1`
    #[command(name = "F", alias = "f")]
    F { shape: String },
    /// D_{k,n}(p,q,r): tableaux by content
    #[command(name = "D", alias = "d")]
    D { k: usize, n: usize },
    /// E_{k,n}(q) = D_{k,n}(1,q,1) by the closed formula
    #[command(name = "E", alias = "e")]
    E { k: usize, n: usize },
    /// Ehat_{k,n}(q) = q^(k-n) E_{k,n}(q)
    #[command(name = "Ehat", alias = "ehat")]
    Ehat { k: usize, n: usize },
    /// Carlitz q-Eulerian B_{n,k}(q) (argument order: n k)
    #[command(name = "B", alias = "b")]
    B { n: usize, k: usize },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Rational closed form of D_k(p,q,r,x), k in {1,2,3}
    #[command(name = "Dk", alias = "dk")]
    Dk {
        k: usize,
        #[arg(long)]
        order: usize,
    },
    /// Ehat(q,x,y) as the explicit series sum
    #[command(name = "Ehat-sum", alias = "ehat-sum")]
    EhatSum {
        #[arg(long)]
        order: usize,
    },
    /// Ehat(q,x,y) as the continued fraction (weighted Motzkin paths)
    #[command(name = "Ehat-cf", alias = "ehat-cf")]
    EhatCf {
        #[arg(long)]
        order: usize,
    },
    /// D_k(p,q,r,x) by the weighted lattice-path method
    #[command(name = "lattice-Dk", alias = "lattice-dk")]
    LatticeDk {
        k: usize,
        #[arg(long)]
        order: usize,
    },
}

fn parse_perm(tokens: &[String]) -> Result<Permutation> {
    let joined = tokens.join(" ");
    joined
        .parse()
        .map_err(|e| anyhow!("{e} (expected comma- or space-separated letters, or a digit string)"))
}

fn read_tableau(path: &str) -> Result<PermutationTableau> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    if text.trim_start().starts_with('{') {
        let json: permtab::tableau::TableauJson = serde_json::from_str(&text)?;
        return Ok(json.into_tableau()?);
    }
    Ok(text.parse()?)
}

/// Streams lines to stdout, stopping quietly if the consumer closes the
/// pipe (e.g. `permtab dist … | head`).
fn emit<I: IntoIterator<Item = String>>(lines: I) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in lines {
        match writeln!(out, "{line}") {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => return Ok(()),
            other => other?,
        }
    }
    Ok(())
}

fn print_poly(poly: &MPoly, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(&poly.to_json_terms())?),
        Format::Csv => {
            println!("p,q,r,y,coeff");
            for term in poly.to_json_terms() {
                println!("{},{},{},{},{}", term.p, term.q, term.r, term.y, term.coeff);
            }
        }
        Format::Text => println!("{poly}"),
    }
    Ok(())
}

fn print_series(series: &TruncatedSeries, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            let coeffs: Vec<String> = (0..=series.order())
                .map(|i| series.coeff(i).to_string())
                .collect();
            println!(
                "{}",
                serde_json::json!({ "order": series.order(), "coeffs": coeffs })
            );
        }
        _ => {
            emit((0..=series.order()).map(|i| format!("x^{i}: {}", series.coeff(i))))?;
        }
    }
    Ok(())
}

/// One named permutation statistic, or a vincular pattern count.
fn stat_value(p: &Permutation, name: &str) -> Result<i64> {
    let ac = || alignments_crossings(p);
    Ok(match name {
        "wex" => p.wex() as i64,
        "des" => p.des() as i64,
        "maj" => p.maj() as i64,
        "mak" => mak(p) as i64,
        "a" => permtab::statistics::abc_statistics(p).0,
        "b" => permtab::statistics::abc_statistics(p).1,
        "c" => permtab::statistics::abc_statistics(p).2,
        "aee" => ac().total_a_ee() as i64,
        "ann" => ac().total_a_nn() as i64,
        "aen" => ac().total_a_en() as i64,
        "ane" => ac().total_a_ne() as i64,
        "cee" => ac().total_c_ee() as i64,
        "cnn" => ac().total_c_nn() as i64,
        "lr" => p.lr_minima() as i64,
        "cycles" => p.cycles() as i64,
        other => {
            let pattern: VincularPattern = other
                .parse()
                .map_err(|_| anyhow!("unknown statistic {other:?}"))?;
            count_vincular(p, &pattern) as i64
        }
    })
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Phi { tableau_file } => {
            let t = read_tableau(&tableau_file)?;
            println!("{}", phi(&t)?);
        }
        Command::PhiInv { perm } => {
            let p = parse_perm(&perm)?;
            println!("{}", phi_inverse(&p).to_text());
        }
        Command::Psi { perm } => {
            println!("{}", psi(&parse_perm(&perm)?));
        }
        Command::PsiInv { perm } => {
            println!("{}", psi_inverse(&parse_perm(&perm)?));
        }
        Command::Stats(StatsCommand::Perm { perm }) => {
            let bundle = StatBundle::of(&parse_perm(&perm)?);
            println!("{}", serde_json::to_string(&bundle)?);
        }
        Command::Stats(StatsCommand::Tab { tableau_file }) => {
            let t = read_tableau(&tableau_file)?;
            t.validate()?;
            println!("{}", serde_json::to_string(&tableau_stats(&t))?);
        }
        Command::CountPattern { perm, pattern } => {
            let p: Permutation = perm.parse()?;
            let pat: VincularPattern = pattern.parse()?;
            println!("{}", count_vincular(&p, &pat));
        }
        Command::Poly(cmd) => {
            let poly = match cmd {
                PolyCommand::F { shape } => {
                    let parts: Vec<usize> = shape
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse().context("shape part"))
                        .collect::<Result<_>>()?;
                    permtab::enumeration::f_lambda(&Partition::new(parts)?)
                }
                PolyCommand::D { k, n } => {
                    check_kn(k, n)?;
                    d_kn(k, n)
                }
                PolyCommand::E { k, n } => {
                    check_kn(k.max(1), n)?;
                    e_kn_closed(k, n)
                }
                PolyCommand::Ehat { k, n } => {
                    check_kn(k.max(1), n)?;
                    e_hat(k, n)
                }
                PolyCommand::B { n, k } => carlitz_b(n, k),
            };
            print_poly(&poly, format)?;
        }
        Command::Series(cmd) => {
            let series = match cmd {
                SeriesCommand::Dk { k, order } => {
                    if !(1..=3).contains(&k) {
                        bail!("closed forms exist for k in 1..=3 only");
                    }
                    d_k_series(k, order.max(k))
                }
                SeriesCommand::EhatSum { order } => e_hat_gf_series(order.max(1)),
                SeriesCommand::EhatCf { order } => e_hat_cf_series(order),
                SeriesCommand::LatticeDk { k, order } => {
                    if k == 0 {
                        bail!("need k ≥ 1");
                    }
                    lattice_path_d(k, order)
                }
            };
            print_series(&series, format)?;
        }
        Command::Verify { check, n, jobs } => {
            if !CHECK_NAMES.contains(&check.as_str()) {
                bail!("unknown check {check:?}; available: {}", CHECK_NAMES.join(", "));
            }
            let report = run_check(&check, n, jobs)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&report)?),
                Format::Csv => match &report.csv {
                    Some(csv) => print!("{csv}"),
                    None => println!("{}", report.to_text()),
                },
                Format::Text => println!("{}", report.to_text()),
            }
            return Ok(!report.is_hard_failure());
        }
        Command::Dist { stats, n, csv: _ } => {
            if n > MAX_BOUND {
                bail!("bound exceeded: n = {n} > {MAX_BOUND}");
            }
            let names: Vec<&str> = stats.split(',').filter(|s| !s.is_empty()).collect();
            if names.is_empty() {
                bail!("empty statistic list");
            }
            let mut table = std::collections::BTreeMap::<Vec<i64>, u64>::new();
            for p in Permutation::all(n) {
                let key: Vec<i64> = names
                    .iter()
                    .map(|name| stat_value(&p, name))
                    .collect::<Result<_>>()?;
                *table.entry(key).or_default() += 1;
            }
            let header = format!("{},count", names.join(","));
            let rows = table.into_iter().map(|(key, count)| {
                let row: Vec<String> = key.iter().map(|v| v.to_string()).collect();
                format!("{},{count}", row.join(","))
            });
            emit(std::iter::once(header).chain(rows))?;
        }
    }
    Ok(true)
}

fn check_kn(k: usize, n: usize) -> Result<()> {
    if k > n {
        bail!("need k ≤ n, got k = {k}, n = {n}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
