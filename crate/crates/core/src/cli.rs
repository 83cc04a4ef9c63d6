//! The `agq` command line.
//!
//! [`run`] parses arguments and writes to the given streams so the whole
//! surface can be driven from tests. Exit status: 0 on success, 1 when a
//! verification fails, 2 on usage or I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::abelian::{abelian_table, aut_abelian, AbelianInvariants};
use crate::catalog::catalog_of_order;
use crate::enumerate::{self, Kind};
use crate::mulgroup::verify_mulgroup_structure;
use crate::permgroups::{involution_classes_of, GroupElement};
use crate::tables::{aut_quasigroup, quasigroup_isomorphic, AxiomReport, CayleyTable, Identity};
use crate::twist::{format_alpha, parse_alpha, recover, twist, BaseKind, TwistSpec};
use crate::Error;

#[derive(Parser, Debug)]
#[command(
    name = "agq",
    version,
    about = "AG-groups, Bol* and right Bol quasigroups via involutive twists"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumKind {
    Ag,
    Bolstar,
}

impl From<EnumKind> for Kind {
    fn from(k: EnumKind) -> Self {
        match k {
            EnumKind::Ag => Kind::Ag,
            EnumKind::Bolstar => Kind::BolStar,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Ag,
    Bolstar,
    Bol,
}

impl From<TableKind> for BaseKind {
    fn from(k: TableKind) -> Self {
        match k {
            TableKind::Ag => BaseKind::Abelian,
            TableKind::Bolstar => BaseKind::Group,
            TableKind::Bol => BaseKind::BolLoop,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count AG-groups or Bol* quasigroups for a range of orders.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long, default_value_t = 20)]
        to: usize,
        /// One JSON object per order instead of a table.
        #[arg(long)]
        json: bool,
        /// Write every class representative to this directory.
        #[arg(long, value_name = "DIR")]
        list: Option<PathBuf>,
    },
    /// Twist an abelian group given by its invariants.
    Construct {
        /// Invariant chain, e.g. `2,6` or `C2 x C6`.
        #[arg(long)]
        abelian: String,
        /// `id`, `neg` or cycle notation.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Twist a base table by an involutive automorphism.
    Twist {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        alpha: String,
        /// What the result should be: `ag` needs an abelian base, `bolstar`
        /// a group, `bol` a right Bol loop.
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the base group and twist of an AG-group or Bol* quasigroup.
    Recover { file: PathBuf },
    /// Check the axioms of a table, printing a witness on failure.
    Verify {
        #[arg(long, value_enum)]
        kind: TableKind,
        file: PathBuf,
    },
    /// Decide whether two tables are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Multiplication group of an AG-group and its structure.
    Mulgroup { file: PathBuf },
    /// List the catalogued groups of an order.
    Catalog {
        #[arg(long)]
        order: usize,
    },
    /// Automorphism group of a table, or of an abelian group by invariants.
    Aut {
        #[arg(required_unless_present = "abelian", conflicts_with = "abelian")]
        file: Option<PathBuf>,
        #[arg(long)]
        abelian: Option<String>,
    },
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotRecoverable | Error::NotLatin | Error::InvalidTwist(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Runs one command line; `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "agq: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "agq: {m}");
            2
        }
    }
}

fn read_table(path: &Path) -> std::result::Result<CayleyTable, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    CayleyTable::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit_table(t: &CayleyTable, dest: Option<&Path>, out: &mut dyn Write) -> io::Result<()> {
    match dest {
        Some(p) => fs::write(p, t.to_text()),
        None => out.write_all(t.to_text().as_bytes()),
    }
}

fn parse_chain(text: &str) -> std::result::Result<AbelianInvariants, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Enumerate {
            kind,
            from,
            to,
            json,
            list,
        } => cmd_enumerate(kind.into(), from, to, json, list.as_deref(), out),
        Command::Construct {
            abelian,
            alpha,
            out: dest,
        } => {
            let g = parse_chain(&abelian)?;
            let base = abelian_table(&g);
            let alpha = parse_alpha(&base, &alpha)?;
            let spec = TwistSpec::new(base, BaseKind::Abelian, alpha)?;
            emit_table(&twist(&spec), dest.as_deref(), out)?;
            Ok(true)
        }
        Command::Twist {
            base,
            alpha,
            kind,
            out: dest,
        } => {
            let base = read_table(&base)?;
            let alpha = parse_alpha(&base, &alpha)?;
            let spec = TwistSpec::new(base, kind.into(), alpha)?;
            emit_table(&twist(&spec), dest.as_deref(), out)?;
            Ok(true)
        }
        Command::Recover { file } => {
            let spec = recover(&read_table(&file)?)?;
            writeln!(
                out,
                "kind: {} over {}",
                spec.kind().twisted_class(),
                spec.kind()
            )?;
            writeln!(out, "identity: {}", spec.identity())?;
            writeln!(out, "alpha: {}", format_alpha(spec.base(), spec.alpha()))?;
            writeln!(out, "# base")?;
            out.write_all(spec.base().to_text().as_bytes())?;
            Ok(true)
        }
        Command::Verify { kind, file } => {
            let report = AxiomReport::of(&read_table(&file)?);
            write!(out, "{report}")?;
            let (ok, law) = match kind {
                TableKind::Ag => (report.is_ag_group(), Identity::LeftInvertive),
                TableKind::Bolstar => (report.is_bol_star(), Identity::BolStar),
                TableKind::Bol => (report.is_right_bol(), Identity::RightBol),
            };
            let name = BaseKind::from(kind).twisted_class();
            if ok {
                writeln!(out, "verdict: {name}")?;
            } else {
                let reason = match (&report.latin, &report.check(law).witness) {
                    (Some(v), _) => format!("not Latin: {v:?}"),
                    (None, Some(w)) => format!("{law} fails at {w:?}"),
                    (None, None) => "missing left identity or left inverses".into(),
                };
                writeln!(out, "verdict: not {name}: {reason}")?;
            }
            Ok(ok)
        }
        Command::Iso { a, b } => {
            let (a, b) = (read_table(&a)?, read_table(&b)?);
            match quasigroup_isomorphic(&a, &b)? {
                Some(p) => {
                    writeln!(out, "isomorphic via {p}")?;
                    Ok(true)
                }
                None => {
                    writeln!(out, "not isomorphic")?;
                    Ok(false)
                }
            }
        }
        Command::Mulgroup { file } => {
            let t = read_table(&file)?;
            let report = match verify_mulgroup_structure(&t) {
                Ok(r) => r,
                Err(Error::InvalidTable(m)) => return Err(Failure::Verification(m)),
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "|M| = {}", report.order)?;
            writeln!(out, "|Inn| = {}", report.inner_order)?;
            writeln!(out, "alpha: {}", report.alpha)?;
            let s = &report.structure;
            writeln!(out, "abelian: {}", s.abelian)?;
            writeln!(out, "cyclic: {}", s.cyclic)?;
            writeln!(out, "dihedral: {}", s.dihedral)?;
            match s.preferred_split() {
                Some(split) => writeln!(
                    out,
                    "split: abelian T of order {} ({}), involution {}{}",
                    split.subgroup.order(),
                    if split.subgroup_cyclic {
                        "cyclic"
                    } else {
                        "non-cyclic"
                    },
                    split.involution,
                    if split.inverts { ", inverting T" } else { "" }
                )?,
                None => writeln!(out, "split: none")?,
            }
            for (claim, verdict) in report.verdicts() {
                writeln!(out, "{claim}: {verdict}")?;
            }
            Ok(report.all_hold())
        }
        Command::Catalog { order } => {
            for (i, entry) in catalog_of_order(order)?.iter().enumerate() {
                writeln!(out, "# {i} {}", entry.spec.name)?;
                out.write_all(entry.table.to_text().as_bytes())?;
            }
            Ok(true)
        }
        Command::Aut { file, abelian } => {
            if let Some(chain) = abelian {
                let g = parse_chain(&chain)?;
                let aut = aut_abelian(&g)?;
                let classes = involution_classes_of(&aut);
                writeln!(out, "group: {g}")?;
                writeln!(out, "|Aut| = {}", aut.len())?;
                writeln!(out, "involution classes: {}", classes.len())?;
                for a in &classes {
                    writeln!(out, "  {a:?}")?;
                }
                return Ok(true);
            }
            let t = read_table(file.as_deref().expect("required by clap"))?;
            let aut = aut_quasigroup(&t)?;
            let classes = aut.involution_classes();
            writeln!(out, "|Aut| = {}", aut.order())?;
            writeln!(out, "generators: {}", join(aut.generators()))?;
            writeln!(out, "involution classes: {}", classes.len())?;
            for a in &classes {
                let size = aut.conjugacy_class(a)?.len();
                writeln!(
                    out,
                    "  {a} (class size {size}{})",
                    if a.is_identity() { ", identity" } else { "" }
                )?;
            }
            Ok(true)
        }
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        return "none".into();
    }
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(
    kind: Kind,
    from: usize,
    to: usize,
    json: bool,
    list_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    if from == 0 || from > to {
        return Err(Failure::Usage(format!("empty order range {from}..{to}")));
    }
    let records = match list_dir {
        None => enumerate::count_range(kind, from, to)?,
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let mut records = Vec::new();
            for n in from..=to {
                let r = enumerate::list(kind, n)?;
                for (i, rep) in r.representatives.iter().flatten().enumerate() {
                    fs::write(dir.join(format!("{kind}_{n}_{i}.tbl")), rep.table.to_text())?;
                }
                records.push(r);
            }
            records
        }
    };
    if json {
        for r in &records {
            writeln!(out, "{}", r.to_json())?;
        }
    } else {
        let (assoc, nonassoc) = match kind {
            Kind::Ag => ("abelian", "non-assoc"),
            Kind::BolStar => ("group", "non-group"),
        };
        writeln!(
            out,
            "{:>5} {:>10} {:>10} {:>6}",
            "order", assoc, nonassoc, "total"
        )?;
        for r in &records {
            writeln!(
                out,
                "{:>5} {:>10} {:>10} {:>6}",
                r.order, r.associative, r.nonassociative, r.total
            )?;
        }
    }
    Ok(true)
}
