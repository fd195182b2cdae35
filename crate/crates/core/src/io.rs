//! Text formats for Cayley tables, permutation generators and enumeration
//! dumps.
//!
//! A Cayley table file holds the order `n` on its first line, then `n` lines
//! of `n` whitespace-separated indices. A permutation file holds the degree
//! `m`, then one generator per line as `m` images. In both formats blank
//! lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use crate::enumerate::IsoClassRecord;
use crate::error::{GroupError, Result};
use crate::families::from_permutations;
use crate::group::GroupTable;

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| GroupError::Parse {
                line: line_no,
                message: format!("`{tok}` is not a non-negative integer"),
            })
        })
        .collect()
}

/// Parses the raw rows of a Cayley table file without validating them.
pub fn parse_table_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let mut iter = lines.iter().copied();
    let (line_no, header) = iter.next().ok_or(GroupError::Parse {
        line: 0,
        message: "missing order line".into(),
    })?;
    let n = match parse_numbers(line_no, header)?.as_slice() {
        [n] => *n,
        _ => {
            return Err(GroupError::Parse {
                line: line_no,
                message: "expected a single order".into(),
            })
        }
    };
    let rows: Vec<Vec<usize>> = iter
        .map(|(line_no, line)| parse_numbers(line_no, line))
        .collect::<Result<_>>()?;
    if rows.len() != n {
        return Err(GroupError::Parse {
            line: lines.last().map_or(line_no, |l| l.0),
            message: format!("expected {n} table rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

/// Parses and validates a Cayley table file.
pub fn parse_table(text: &str) -> Result<GroupTable> {
    GroupTable::validate(&parse_table_rows(text)?)
}

/// Writes a table in the Cayley table format, without comments.
pub fn write_table(g: &GroupTable) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a permutation generator file into `(degree, generators)`.
pub fn parse_permutations(text: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let Some(&(line_no, header)) = lines.first() else {
        return Err(GroupError::Parse {
            line: 0,
            message: "missing degree line".into(),
        });
    };
    let degree = match parse_numbers(line_no, header)?.as_slice() {
        [m] => *m,
        _ => {
            return Err(GroupError::Parse {
                line: line_no,
                message: "expected a single degree".into(),
            })
        }
    };
    let gens = lines[1..]
        .iter()
        .map(|&(line_no, line)| parse_numbers(line_no, line))
        .collect::<Result<_>>()?;
    Ok((degree, gens))
}

/// Parses a permutation file and returns the Cayley table of the group
/// its generators generate.
pub fn parse_permutation_group(text: &str, max_order: usize) -> Result<GroupTable> {
    let (degree, gens) = parse_permutations(text)?;
    from_permutations(degree, &gens, max_order)
}

/// Enumeration dump: for each class a `#` header block with order, class
/// index, fingerprint, name and census, then the representative table.
pub fn write_enumeration(records: &[IsoClassRecord]) -> String {
    let mut out = String::new();
    let classes = records.len();
    if let Some(first) = records.first() {
        let _ = writeln!(out, "# order {} : {} classes", first.order, classes);
    }
    for (i, rec) in records.iter().enumerate() {
        let _ = writeln!(out);
        let _ = writeln!(out, "# class {} of order {}", i, rec.order);
        let _ = writeln!(out, "# fingerprint {}", rec.fingerprint);
        let name = rec.recognized.as_ref().map_or("-".to_string(), |s| s.to_string());
        let _ = writeln!(out, "# recognized {name}");
        let _ = writeln!(
            out,
            "# census divisors={:?} counts={:?} total={} deficiency={}",
            rec.census.divisors, rec.census.counts, rec.census.total, rec.census.deficiency
        );
        out.push_str(&write_table(&rec.representative));
    }
    out
}

/// Reads back the tables of an enumeration dump, in file order.
pub fn parse_enumeration(text: &str) -> Result<Vec<GroupTable>> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let mut tables = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (line_no, header) = lines[i];
        let n = match parse_numbers(line_no, header)?.as_slice() {
            [n] => *n,
            _ => {
                return Err(GroupError::Parse {
                    line: line_no,
                    message: "expected a table order".into(),
                })
            }
        };
        let end = i + 1 + n;
        if end > lines.len() {
            return Err(GroupError::Parse {
                line: line_no,
                message: format!("table of order {n} is truncated"),
            });
        }
        let rows = lines[i + 1..end]
            .iter()
            .map(|&(line_no, line)| parse_numbers(line_no, line))
            .collect::<Result<Vec<_>>>()?;
        tables.push(GroupTable::validate(&rows)?);
        i = end;
    }
    Ok(tables)
}
