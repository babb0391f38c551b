//! `bst`: base sizes of permutation group actions from the command line.
//!
//! Exit status: 0 when the claim is established, 1 when it is not, 2 on bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bst_core::base::{exact_base_size, BaseSizeResult, ExhaustiveMode, Policy, Relation};
use bst_core::classes::data::{DataSet, OrderSpec};
use bst_core::classes::report::{floor_log2, Report};
use bst_core::classes::{class_term, suites};
use bst_core::double_coset::double_cosets;
use bst_core::formats::{load_class_data_dir, parse_certificates, read_group_file, serialize_certificates};
use bst_core::{Group, Int, Rational};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "bst", version, about = "Compute, bound and certify base sizes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the order of a group.
    Order { group: PathBuf },
    /// Bracket b(G,H) for the action of G on the cosets of H.
    BaseSize {
        group: PathBuf,
        subgroup: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_c: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Always confirm with the exhaustive search when the instance is small enough.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_name = "FILE")]
        emit_cert: Option<PathBuf>,
    },
    /// Certificate checks.
    Witness {
        #[command(subcommand)]
        cmd: WitnessCmd,
    },
    /// Census of the (K,K) double cosets of G.
    DoubleCosets {
        group: PathBuf,
        subgroup: PathBuf,
        #[arg(long)]
        summary: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Q^(G,H,c) from class data.
    Qhat {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        strict: bool,
    },
    /// Run one of the fixed point ratio suites.
    Report {
        suite: Suite,
        #[arg(long)]
        data: PathBuf,
        /// Recompute every derived cell and refuse data that disagrees.
        #[arg(long)]
        strict: bool,
    },
    /// Base sizes for every soluble core-free subgroup in a catalog directory.
    Survey {
        group: PathBuf,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_c: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Re-verify every certificate in a file.
    Verify {
        group: PathBuf,
        subgroup: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Monster,
    BabyParabolics,
    BabyNonparabolic,
}

/// Anything that makes the input unusable; maps to exit status 2.
struct DataError(String);

impl<E: std::fmt::Display> From<E> for DataError {
    fn from(e: E) -> Self {
        DataError(e.to_string())
    }
}

type Outcome = Result<bool, DataError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(DataError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Order { group } => {
            println!("{}", read_group_file(&group)?.order());
            Ok(true)
        }
        Cmd::BaseSize { group, subgroup, max_c, trials, seed, workers, exhaustive, emit_cert } => {
            let (g, h) = (read_group_file(&group)?, read_group_file(&subgroup)?);
            let policy = Policy {
                max_c,
                trials,
                seed,
                workers: workers.max(1),
                exhaustive: if exhaustive { ExhaustiveMode::Always } else { ExhaustiveMode::WhenOpen },
            };
            let r = exact_base_size(&g, &h, &policy)?;
            if !r.verify(&g, &h)? {
                return Err(DataError("a produced certificate failed to verify".into()));
            }
            for c in &r.certificates {
                println!("certificate {} establishes b {} {}", c.kind.as_str(), c.relation.as_str(), c.value);
            }
            println!("{}", bracket(&r));
            if let Some(path) = emit_cert {
                std::fs::write(&path, serialize_certificates(&r.certificates))?;
            }
            Ok(r.exact)
        }
        Cmd::Witness { cmd: WitnessCmd::Verify { group, subgroup, cert } } => {
            let (g, h) = (read_group_file(&group)?, read_group_file(&subgroup)?);
            let certs = parse_certificates(&std::fs::read_to_string(&cert)?)?;
            let (mut lo, mut hi) = (1u32, u32::MAX);
            let mut all = true;
            for c in &certs {
                let ok = c.verify(&g, &h)?;
                all &= ok;
                println!("{} b {} {}: {}", c.kind.as_str(), c.relation.as_str(), c.value, if ok { "valid" } else { "INVALID" });
                if ok {
                    match c.relation {
                        Relation::Ge => lo = lo.max(c.value),
                        Relation::Le => hi = hi.min(c.value),
                        Relation::Eq => {
                            lo = lo.max(c.value);
                            hi = hi.min(c.value);
                        }
                    }
                }
            }
            if lo == hi {
                println!("b = {lo}");
            } else if hi != u32::MAX {
                println!("{lo} <= b <= {hi}");
            } else {
                println!("b >= {lo}");
            }
            Ok(all)
        }
        Cmd::DoubleCosets { group, subgroup, summary, budget } => {
            let (g, k) = (read_group_file(&group)?, read_group_file(&subgroup)?);
            let census = double_cosets(&g, &k, budget)?;
            if !summary {
                for e in &census.entries {
                    let imgs: Vec<String> = e.rep.images().iter().map(|x| x.to_string()).collect();
                    println!("{} {}", e.size, imgs.join(" "));
                }
            }
            println!("double cosets: {}{}", census.entries.len(), if census.complete { "" } else { " (budget reached)" });
            println!("covered: {} of {}", census.total(), census.ambient_order);
            println!("regular (size |K|^2): {}", census.regular().count());
            if !census.sizes_consistent() {
                return Err(DataError("double coset sizes are inconsistent".into()));
            }
            Ok(census.complete)
        }
        Cmd::Qhat { data, group, subgroup, c, strict } => {
            let ds = load(&data, strict)?;
            let q = qhat_from_record(&ds, &group, &subgroup, c)?;
            println!("Q^({group}, {subgroup}, {c}) = {q}{}", hint(&q));
            let ok = q < Rational::from_integer(1.into());
            println!("{}", if ok { "Q^ < 1: b <= c" } else { "Q^ >= 1: not established" });
            Ok(ok)
        }
        Cmd::Report { suite, data, strict } => {
            let ds = load(&data, strict)?;
            let reports: Vec<Report<Int>> = match suite {
                Suite::Monster => suites::monster(&ds)?,
                Suite::BabyParabolics => suites::baby_parabolics(&ds)?,
                Suite::BabyNonparabolic => suites::baby_nonparabolic(&ds)?,
            };
            if reports.is_empty() {
                return Err(DataError("no subgroup data for this suite".into()));
            }
            let mut all = true;
            for r in &reports {
                print!("{}", r.render());
                all &= r.holds;
            }
            println!("{} of {} reports hold", reports.iter().filter(|r| r.holds).count(), reports.len());
            Ok(all)
        }
        Cmd::Survey { group, catalog, out, max_c, trials, seed } => survey(&group, &catalog, &out, Policy { max_c, trials, seed, ..Policy::default() }),
    }
}

fn bracket(r: &BaseSizeResult) -> String {
    if r.exact {
        format!("b = {}", r.lower)
    } else {
        format!("{} <= b <= {}", r.lower, r.upper)
    }
}

fn hint(x: &Rational) -> String {
    floor_log2(x).map(|k| format!("  [2^{k} <= x < 2^{}]", k + 1)).unwrap_or_default()
}

fn load(dir: &Path, strict: bool) -> Result<DataSet<Int>, DataError> {
    let ds = load_class_data_dir::<Int>(dir)?;
    if strict {
        let checks = ds.strict_check()?;
        println!("strict: {} cells recomputed", checks.len());
    }
    Ok(ds)
}

/// Sums `|x^G|·fpr(x)^c` over the prime order classes of `group`. A class with no count is
/// allowed only when the subgroup has no elements of that order.
fn qhat_from_record(ds: &DataSet<Int>, group: &str, sub: &str, c: u32) -> Result<Rational, DataError> {
    let t = ds.table(group)?;
    let rec = ds.subgroup(sub, group)?;
    let mut total = Rational::from_integer(0.into());
    for cl in t.prime_classes() {
        let n = match rec.data.count(&cl.label) {
            Some(n) => n.clone(),
            None => {
                let r = cl.element_order;
                let none = rec.elements(OrderSpec::Exactly(r)).is_some_and(|n| *n == BigInt::from(0)) || !(&rec.data.order % BigInt::from(r) == BigInt::from(0));
                if !none {
                    return Err(DataError(format!("no count for class {} in {sub}", cl.label)));
                }
                BigInt::from(0)
            }
        };
        total += class_term(&cl.size, &n, c);
    }
    Ok(total)
}

fn survey(group: &Path, catalog: &Path, out: &Path, policy: Policy) -> Outcome {
    let g = read_group_file(group)?;
    let mut files: Vec<PathBuf> = std::fs::read_dir(catalog)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(DataError(format!("no .grp files in {}", catalog.display())));
    }
    let cat: Vec<Group> = files.iter().map(|p| read_group_file(p)).collect::<Result<_, _>>()?;
    let s = bst_core::base::survey(&g, &cat, &policy)?;
    let cert_dir = out.with_extension("certs");
    let mut tsv = String::from("name\torder\tsoluble\tcorefree\tlower\tupper\texact\tcertificate-path\n");
    let mut all_exact = true;
    for row in &s.rows {
        let (lower, upper, exact, path) = match &row.result {
            Some(r) => {
                if !r.verify(&g, cat.iter().find(|h| h.name() == row.name).expect("row from catalog"))? {
                    return Err(DataError(format!("certificate for {} failed to verify", row.name)));
                }
                std::fs::create_dir_all(&cert_dir)?;
                let p = cert_dir.join(format!("{}.cert", file_stem(&row.name)));
                std::fs::write(&p, serialize_certificates(&r.certificates))?;
                all_exact &= r.exact;
                (r.lower.to_string(), r.upper.to_string(), r.exact.to_string(), p.display().to_string())
            }
            None => ("-".into(), "-".into(), "-".into(), "-".into()),
        };
        let _ = writeln!(tsv, "{}\t{}\t{}\t{}\t{lower}\t{upper}\t{exact}\t{path}", row.name, row.order, row.soluble, row.core_free);
        println!("{:<20} {:>12} soluble={} corefree={} b in [{lower}, {upper}]", row.name, row.order, row.soluble, row.core_free);
    }
    std::fs::write(out, tsv)?;
    if s.s_lower == s.s_upper {
        println!("s = {} over this catalog", s.s_lower);
    } else {
        println!("{} <= s <= {} over this catalog", s.s_lower, s.s_upper);
    }
    Ok(all_exact && s.rows.iter().any(|r| r.result.is_some()))
}

/// Group labels like `2^(1+4).S3` as safe file names.
fn file_stem(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '-' { c } else { '_' }).collect()
}
