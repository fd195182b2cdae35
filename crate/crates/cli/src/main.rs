//! `census`: cyclic subgroup censuses, classification checks and
//! enumeration of small groups.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclic_census::classify::star_groups;
use cyclic_census::io::{parse_permutation_group, parse_table, write_enumeration, write_table};
use cyclic_census::{
    census, cyclic_subgroups, deficiency_spectrum, enumerate_groups, is_isomorphic, is_p_group, recognize,
    theorem1_holds, theorem2_verdict, universe, ClassificationVerdict, CyclicCensus, EnumerationConfig,
    FamilySpec, GroupError, GroupTable, IsoClassRecord, PGroup, DEFAULT_MAX_ORDER,
};

#[derive(Parser)]
#[command(name = "census", version, about = "Cyclic subgroup census of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report to a file instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Allow enumeration of orders 13 to 16
    #[arg(long, global = true)]
    extended: bool,

    /// Worker threads for enumeration
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    /// Visit every table instead of only lexicographically least ones (slow)
    #[arg(long, global = true)]
    no_canonical_prune: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Census and classification of one group
    Census(Source),
    /// List the cyclic subgroups of one group
    Show(Source),
    /// Check a classification statement over all groups up to an order
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
    /// Groups with a given deficiency |G| - |C(G)|
    Spectrum {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        r: Option<usize>,
        /// Print the full order by deficiency table
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
    /// Enumerate the groups of order N up to isomorphism
    Enumerate { n: usize },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family spec such as `dihedral:8` or `product:cyclic:2,cyclic:4`
    #[arg(long)]
    family: Option<String>,
    /// Cayley table file
    #[arg(long)]
    table: Option<PathBuf>,
    /// Permutation generator file
    #[arg(long)]
    perms: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    T1,
    T2,
    Corollary,
}

struct Report {
    body: String,
    /// `false` when a counterexample was found.
    ok: bool,
    /// The command wrote its own output file; `body` goes to stdout.
    wrote_output: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report {
            body,
            ok: true,
            wrote_output: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match emit(
            cli.output.as_deref().filter(|_| !report.wrote_output),
            &report.body,
        ) {
            Ok(()) if report.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: Option<&Path>, body: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let config = EnumerationConfig {
        extended: cli.extended,
        jobs: cli.jobs as usize,
        canonical_prune: !cli.no_canonical_prune,
    };
    match &cli.command {
        Command::Census(src) => cmd_census(&load(src)?, cli.format),
        Command::Show(src) => cmd_show(&load(src)?, cli.format),
        Command::Verify { theorem, max_order } => {
            cmd_verify(*theorem, &universe(*max_order, &config)?, cli.format)
        }
        Command::Spectrum { r, all, max_order } => {
            let all_classes = universe(*max_order, &config)?;
            if *all {
                Ok(Report::ok(spectrum_table(&all_classes, cli.format)?))
            } else {
                let r = r.expect("clap requires --r without --all");
                Ok(Report::ok(spectrum_rows(&all_classes, r, cli.format)?))
            }
        }
        Command::Enumerate { n } => cmd_enumerate(*n, &config, cli.output.as_deref()),
    }
}

fn load(src: &Source) -> Result<GroupTable> {
    if let Some(spec) = &src.family {
        let spec: FamilySpec = spec.parse()?;
        return Ok(spec.build()?);
    }
    let (path, is_table) = match (&src.table, &src.perms) {
        (Some(p), _) => (p, true),
        (_, Some(p)) => (p, false),
        _ => unreachable!("clap enforces exactly one source"),
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let group = if is_table {
        parse_table(&text)
    } else {
        parse_permutation_group(&text, DEFAULT_MAX_ORDER)
    };
    group.with_context(|| format!("invalid group in {}", path.display()))
}

fn name_of(spec: &Option<FamilySpec>) -> String {
    spec.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct CensusReport<'a> {
    census: &'a CyclicCensus,
    verdict: &'a ClassificationVerdict,
}

#[derive(Serialize)]
struct ClassRow {
    order: usize,
    class_index: usize,
    recognized: String,
    total_cyclic: usize,
    deficiency: usize,
}

fn to_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn cmd_census(g: &GroupTable, format: Format) -> Result<Report> {
    let c = census(g);
    let v = theorem2_verdict(g)?;
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&CensusReport {
                census: &c,
                verdict: &v,
            })?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let row = ClassRow {
                order: c.group_order,
                class_index: 0,
                recognized: name_of(&recognize(g)),
                total_cyclic: c.total,
                deficiency: c.deficiency,
            };
            to_csv([row])?
        }
        Format::Text => {
            let p = v
                .p_group
                .map_or_else(|| "no".to_string(), |p| format!("yes (p = {p})"));
            format!(
                "order                 {}\n\
                 divisors              {}\n\
                 counts                {}\n\
                 total_cyclic          {}\n\
                 deficiency            {}\n\
                 elementary_abelian_2  {}\n\
                 star                  {}\n\
                 star_identity         {}\n\
                 p_group               {p}\n",
                c.group_order,
                join(&c.divisors),
                join(&c.counts),
                c.total,
                c.deficiency,
                v.is_elem_abelian_2,
                v.satisfies_star,
                name_of(&v.star_identity),
            )
        }
    };
    Ok(Report::ok(body))
}

#[derive(Serialize)]
struct SubgroupRow {
    order: usize,
    generator: usize,
    members: Vec<usize>,
}

fn cmd_show(g: &GroupTable, format: Format) -> Result<Report> {
    let rows: Vec<SubgroupRow> = cyclic_subgroups(g)
        .into_iter()
        .map(|s| SubgroupRow {
            order: s.order,
            generator: s.generator,
            members: s.members.to_vec(),
        })
        .collect();
    let c = census(g);
    let body = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Show<'a> {
                subgroups: &'a [SubgroupRow],
                census: &'a CyclicCensus,
            }
            let mut s = serde_json::to_string_pretty(&Show {
                subgroups: &rows,
                census: &c,
            })?;
            s.push('\n');
            s
        }
        Format::Csv => to_csv(rows.iter().map(|r| (r.order, r.generator, join(&r.members))))
            .map(|body| format!("order,generator,members\n{body}"))?,
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(
                    s,
                    "order {:>2}  generator {:>2}  members {{{}}}",
                    r.order,
                    r.generator,
                    join(&r.members)
                );
            }
            let _ = writeln!(
                s,
                "{} cyclic subgroups, order {}, deficiency {}",
                c.total, c.group_order, c.deficiency
            );
            s
        }
    };
    Ok(Report::ok(body))
}

#[derive(Serialize)]
struct Tally {
    order: usize,
    classes: usize,
    hits: usize,
}

#[derive(Serialize)]
struct Verification {
    theorem: &'static str,
    max_order: usize,
    verified: bool,
    tallies: Vec<Tally>,
    found: Vec<String>,
    problems: Vec<String>,
}

fn cmd_verify(theorem: Theorem, all: &[IsoClassRecord], format: Format) -> Result<Report> {
    let max_order = all.iter().map(|r| r.order).max().unwrap_or(0);
    let mut problems: Vec<String> = Vec::new();
    let mut counterexample = |what: String, g: &GroupTable| {
        problems.push(format!("{what}\n{}", write_table(g)));
    };
    let mut hit = vec![false; all.len()];
    let mut found = Vec::new();

    match theorem {
        Theorem::T1 => {
            for (i, rec) in all.iter().enumerate() {
                if !theorem1_holds(&rec.representative) {
                    counterexample(
                        format!("order {} class breaks |C(G)| = |G| <=> exponent 2", rec.order),
                        &rec.representative,
                    );
                }
                hit[i] = rec.census.deficiency == 0;
                if hit[i] {
                    found.push(format!("order {}", rec.order));
                }
            }
        }
        Theorem::T2 | Theorem::Corollary => {
            for (i, rec) in all.iter().enumerate() {
                let verdict = match theorem2_verdict(&rec.representative) {
                    Ok(v) => v,
                    Err(
                        e @ (GroupError::StarWithoutIdentity { .. } | GroupError::IdentityWithoutStar { .. }),
                    ) => {
                        counterexample(e.to_string(), &rec.representative);
                        continue;
                    }
                    Err(e) => return Err(e.into()),
                };
                hit[i] = verdict.satisfies_star
                    && (theorem == Theorem::T2 || is_p_group(&rec.representative) == PGroup::No);
                if hit[i] {
                    found.push(format!(
                        "{} (order {})",
                        name_of(&verdict.star_identity),
                        rec.order
                    ));
                }
            }
            let expected: Vec<FamilySpec> = star_groups()
                .into_iter()
                .filter(|s| s.order().is_some_and(|n| n <= max_order))
                .filter(|s| theorem == Theorem::T2 || *s == FamilySpec::Symmetric(3))
                .collect();
            for spec in &expected {
                let reference = spec.build()?;
                let matches = all
                    .iter()
                    .zip(&hit)
                    .filter(|(rec, &h)| h && is_isomorphic(&rec.representative, &reference))
                    .count();
                if matches != 1 {
                    problems.push(format!("{spec} found {matches} times, expected once"));
                }
            }
            if found.len() != expected.len() {
                problems.push(format!(
                    "{} classes found, expected {}",
                    found.len(),
                    expected.len()
                ));
            }
        }
    }

    let mut tallies: Vec<Tally> = Vec::new();
    for (rec, &h) in all.iter().zip(&hit) {
        match tallies.last_mut() {
            Some(t) if t.order == rec.order => {
                t.classes += 1;
                t.hits += h as usize;
            }
            _ => tallies.push(Tally {
                order: rec.order,
                classes: 1,
                hits: h as usize,
            }),
        }
    }

    let report = Verification {
        theorem: match theorem {
            Theorem::T1 => "t1",
            Theorem::T2 => "t2",
            Theorem::Corollary => "corollary",
        },
        max_order,
        verified: problems.is_empty(),
        tallies,
        found,
        problems,
    };
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report)?;
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&report.tallies)?,
        Format::Text => verification_text(&report),
    };
    Ok(Report {
        body,
        ok: report.verified,
        wrote_output: false,
    })
}

fn verification_text(report: &Verification) -> String {
    let hit_label = match report.theorem {
        "t1" => "deficiency 0",
        "t2" => "deficiency 1",
        _ => "deficiency 1, not a p-group",
    };
    let mut s = format!(
        "{} over all groups of order <= {}\n",
        report.theorem, report.max_order
    );
    let _ = writeln!(s, "order  classes  {hit_label}");
    for t in &report.tallies {
        let _ = writeln!(
            s,
            "{:>5}  {:>7}  {:>w$}",
            t.order,
            t.classes,
            t.hits,
            w = hit_label.len()
        );
    }
    let hits: usize = report.tallies.iter().map(|t| t.hits).sum();
    match report.theorem {
        "t1" => {
            let _ = writeln!(s, "deficiency-0 classes: {hits}");
        }
        "t2" => {
            let _ = writeln!(s, "star groups found: {}", report.found.join(", "));
        }
        _ => {
            let _ = writeln!(s, "non-p-group star groups: {}", report.found.join(", "));
        }
    }
    for p in &report.problems {
        let _ = writeln!(s, "counterexample: {p}");
    }
    s.push_str(if report.verified { "VERIFIED\n" } else { "FAILED\n" });
    s
}

fn class_rows(all: &[IsoClassRecord]) -> Vec<(ClassRow, &IsoClassRecord)> {
    let mut rows = Vec::new();
    let mut index = 0;
    for (i, rec) in all.iter().enumerate() {
        index = if i > 0 && all[i - 1].order == rec.order {
            index + 1
        } else {
            0
        };
        rows.push((
            ClassRow {
                order: rec.order,
                class_index: index,
                recognized: name_of(&rec.recognized),
                total_cyclic: rec.census.total,
                deficiency: rec.census.deficiency,
            },
            rec,
        ));
    }
    rows
}

fn render_rows(rows: &[&ClassRow], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows)?;
            s.push('\n');
            s
        }
        Format::Csv => to_csv(rows)?,
        Format::Text => {
            let mut s = format!(
                "{:>5}  {:>5}  {:<32}  {:>5}  {:>2}\n",
                "order", "class", "recognized", "|C|", "r"
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>5}  {:>5}  {:<32}  {:>5}  {:>2}",
                    r.order, r.class_index, r.recognized, r.total_cyclic, r.deficiency
                );
            }
            let _ = writeln!(s, "{} classes", rows.len());
            s
        }
    })
}

fn spectrum_rows(all: &[IsoClassRecord], r: usize, format: Format) -> Result<String> {
    let rows = class_rows(all);
    let selected = deficiency_spectrum(all, r);
    let picked: Vec<&ClassRow> = rows
        .iter()
        .filter(|(_, rec)| selected.iter().any(|s| std::ptr::eq(*s, *rec)))
        .map(|(row, _)| row)
        .collect();
    render_rows(&picked, format)
}

fn spectrum_table(all: &[IsoClassRecord], format: Format) -> Result<String> {
    let rows = class_rows(all);
    if format != Format::Text {
        return render_rows(&rows.iter().map(|(row, _)| row).collect::<Vec<_>>(), format);
    }
    let max_order = all.iter().map(|r| r.order).max().unwrap_or(1);
    let mut s = String::from("order\\r");
    for r in 0..max_order {
        let _ = write!(s, " {r:>3}");
    }
    s.push('\n');
    for n in 1..=max_order {
        let _ = write!(s, "{n:>7}");
        for r in 0..max_order {
            let count = all
                .iter()
                .filter(|c| c.order == n && c.census.deficiency == r)
                .count();
            if r < n {
                let _ = write!(s, " {count:>3}");
            } else {
                s.push_str("   .");
            }
        }
        s.push('\n');
    }
    Ok(s)
}

fn cmd_enumerate(n: usize, config: &EnumerationConfig, path: Option<&Path>) -> Result<Report> {
    let records = enumerate_groups(n, config)?;
    let count = format!(
        "{} class{}\n",
        records.len(),
        if records.len() == 1 { "" } else { "es" }
    );
    let dump = write_enumeration(&records);
    match path {
        Some(path) => {
            std::fs::write(path, &dump).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(Report {
                body: count,
                ok: true,
                wrote_output: true,
            })
        }
        None => {
            eprint!("{count}");
            Ok(Report::ok(dump))
        }
    }
}
