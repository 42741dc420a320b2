//! Interval table emission in Markdown, CSV, and JSON.
//!
//! Each row covers one interval `[lo, hi]` and is rendered in one of two
//! modes: an explicit member list (for intervals ending at or below
//! [`LIST_MODE_MAX_HI`], where gaps dominate), or the set-difference form
//! `[lo,hi] ∖ {gaps}` (members dominate). A complement row with no gaps
//! renders as `all values`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sieve::ScanReport;

/// Intervals ending at or below this emit explicit member lists; beyond it
/// rows switch to the set-difference form.
pub const LIST_MODE_MAX_HI: u64 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowMode {
    /// `values` are the members of the interval.
    List,
    /// `values` are the gaps; members are the interval minus `values`.
    Complement,
}

/// One emitted table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub lo: u64,
    pub hi: u64,
    pub mode: RowMode,
    pub values: Vec<u64>,
}

impl TableRow {
    /// The members of the interval this row denotes, ascending.
    pub fn members(&self) -> Vec<u64> {
        match self.mode {
            RowMode::List => self.values.clone(),
            RowMode::Complement => (self.lo..=self.hi)
                .filter(|n| self.values.binary_search(n).is_err())
                .collect(),
        }
    }

    /// Canonical textual content of the row.
    pub fn content(&self) -> String {
        match self.mode {
            RowMode::List => {
                if self.values.is_empty() {
                    "none".to_string()
                } else {
                    join(&self.values)
                }
            }
            RowMode::Complement => {
                if self.values.is_empty() {
                    "all values".to_string()
                } else {
                    format!("[{},{}] ∖ {{{}}}", self.lo, self.hi, join(&self.values))
                }
            }
        }
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Builds one row per interval from a scan report. Every interval must
/// satisfy `1 <= lo <= hi <= report.bound()`.
pub fn build_rows(report: &ScanReport, intervals: &[(u64, u64)]) -> Result<Vec<TableRow>> {
    intervals
        .iter()
        .map(|&(lo, hi)| {
            if lo < 1 || lo > hi || hi > report.bound() {
                return Err(Error::Range(format!(
                    "table interval [{lo},{hi}] outside scanned range [1,{}]",
                    report.bound()
                )));
            }
            let gaps = report.gaps_in(lo, hi)?;
            if hi <= LIST_MODE_MAX_HI {
                let members = (lo..=hi)
                    .filter(|n| gaps.binary_search(n).is_err())
                    .collect();
                Ok(TableRow {
                    lo,
                    hi,
                    mode: RowMode::List,
                    values: members,
                })
            } else {
                Ok(TableRow {
                    lo,
                    hi,
                    mode: RowMode::Complement,
                    values: gaps,
                })
            }
        })
        .collect()
}

/// The canonical interval layout: hundreds up to 1100, then `[1101,1300]`
/// and `[1301,1700]`, then one final row for everything past the last gap.
/// For bounds below 1700 the layout degrades to plain hundreds.
pub fn default_intervals(bound: u64) -> Vec<(u64, u64)> {
    if bound >= 1700 {
        let mut rows: Vec<(u64, u64)> = (0..11).map(|i| (100 * i + 1, 100 * (i + 1))).collect();
        rows.push((1101, 1300));
        rows.push((1301, 1700));
        if bound > 1700 {
            rows.push((1675, bound));
        }
        rows
    } else {
        let mut rows = Vec::new();
        let mut lo = 1;
        while lo <= bound {
            rows.push((lo, (lo + 99).min(bound)));
            lo += 100;
        }
        rows
    }
}

pub fn render_markdown(rows: &[TableRow]) -> String {
    let mut out = String::from("| interval | members |\n| --- | --- |\n");
    for row in rows {
        out.push_str(&format!("| [{},{}] | {} |\n", row.lo, row.hi, row.content()));
    }
    out
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("lo,hi,mode,values\n");
    for row in rows {
        let mode = match row.mode {
            RowMode::List => "list",
            RowMode::Complement => "complement",
        };
        let values = row
            .values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("{},{},{},{}\n", row.lo, row.hi, mode, values));
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> Result<String> {
    serde_json::to_string_pretty(&serde_json::json!({ "intervals": rows }))
        .map_err(|e| Error::Serialize(e.to_string()))
}

/// Parses one Markdown data row produced by [`render_markdown`] back into a
/// [`TableRow`]. Inverse of emission up to the row's member set.
pub fn parse_markdown_row(line: &str) -> Result<TableRow> {
    let cells: Vec<&str> = line
        .trim()
        .trim_start_matches('|')
        .trim_end_matches('|')
        .split('|')
        .map(str::trim)
        .collect();
    if cells.len() != 2 {
        return Err(Error::Parse(format!("expected two cells, got {}: {line:?}", cells.len())));
    }
    let (lo, hi) = parse_interval(cells[0])?;
    let content = cells[1];
    if content == "all values" {
        return Ok(TableRow {
            lo,
            hi,
            mode: RowMode::Complement,
            values: Vec::new(),
        });
    }
    if let Some(rest) = content.strip_prefix('[') {
        // set-difference form: "[lo,hi] ∖ {v, v, ...}"
        let (ivl, tail) = rest
            .split_once(']')
            .ok_or_else(|| Error::Parse(format!("unterminated interval in {content:?}")))?;
        let (plo, phi) = parse_interval(&format!("[{ivl}]"))?;
        if (plo, phi) != (lo, hi) {
            return Err(Error::Parse(format!(
                "row interval [{lo},{hi}] does not match content interval [{plo},{phi}]"
            )));
        }
        let set = tail
            .trim()
            .trim_start_matches('∖')
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("missing gap set in {content:?}")))?;
        return Ok(TableRow {
            lo,
            hi,
            mode: RowMode::Complement,
            values: parse_values(set)?,
        });
    }
    let values = if content == "none" {
        Vec::new()
    } else {
        parse_values(content)?
    };
    Ok(TableRow {
        lo,
        hi,
        mode: RowMode::List,
        values,
    })
}

fn parse_interval(cell: &str) -> Result<(u64, u64)> {
    let inner = cell
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("malformed interval {cell:?}")))?;
    let (lo, hi) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("malformed interval {cell:?}")))?;
    let lo = lo.trim().parse::<u64>().map_err(|e| Error::Parse(e.to_string()))?;
    let hi = hi.trim().parse::<u64>().map_err(|e| Error::Parse(e.to_string()))?;
    Ok((lo, hi))
}

fn parse_values(list: &str) -> Result<Vec<u64>> {
    let list = list.trim();
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|v| v.trim().parse::<u64>().map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::membership::{ConstraintProfile, GeneratorPair};
    use crate::sieve::scan;

    fn report() -> ScanReport {
        scan(GeneratorPair::default(), &ConstraintProfile::default(), 2000).unwrap()
    }

    #[test]
    fn emits_set_difference_rows() {
        let rows = build_rows(&report(), &[(401, 500), (701, 800), (1675, 2000)]).unwrap();
        assert_eq!(
            rows[0].content(),
            "[401,500] ∖ {408, 410, 412, 414, 416, 420, 423, 426, 430, 432, 434, 435, 436, \
             452, 453, 454, 455, 456, 458, 473, 474, 476, 478, 480, 485, 486, 489, 490, 492, \
             496, 498, 500}"
        );
        assert_eq!(
            rows[1].content(),
            "[701,800] ∖ {702, 705, 710, 738, 744, 750, 756}"
        );
        assert_eq!(rows[2].content(), "all values");
    }

    #[test]
    fn emits_member_lists_below_threshold() {
        let rows = build_rows(&report(), &[(1, 100)]).unwrap();
        assert_eq!(rows[0].mode, RowMode::List);
        assert_eq!(rows[0].values, [11, 43, 54, 65, 75, 76, 87, 97, 98]);
        assert_eq!(rows[0].content(), "11, 43, 54, 65, 75, 76, 87, 97, 98");
    }

    #[test]
    fn rejects_out_of_bound_intervals() {
        assert!(build_rows(&report(), &[(1, 2001)]).is_err());
        assert!(build_rows(&report(), &[(0, 10)]).is_err());
    }

    #[test]
    fn markdown_round_trip_reproduces_members() {
        let rows = build_rows(
            &report(),
            &[(1, 100), (301, 400), (401, 500), (1301, 1700), (1675, 2000)],
        )
        .unwrap();
        let md = render_markdown(&rows);
        let parsed: Vec<TableRow> = md
            .lines()
            .skip(2)
            .map(|l| parse_markdown_row(l).unwrap())
            .collect();
        for (row, back) in rows.iter().zip(&parsed) {
            assert_eq!(row.members(), back.members());
        }
    }

    #[test]
    fn renderings_carry_identical_values() {
        let rows = build_rows(&report(), &[(101, 200), (501, 600)]).unwrap();
        let csv = render_csv(&rows);
        let json: serde_json::Value = serde_json::from_str(&render_json(&rows).unwrap()).unwrap();
        for (i, row) in rows.iter().enumerate() {
            let csv_line = csv.lines().nth(i + 1).unwrap();
            let csv_values: Vec<u64> = csv_line
                .split(',')
                .nth(3)
                .unwrap()
                .split_whitespace()
                .map(|v| v.parse().unwrap())
                .collect();
            assert_eq!(csv_values, row.values);
            let json_values: Vec<u64> = json["intervals"][i]["values"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect();
            assert_eq!(json_values, row.values);
        }
    }

    #[test]
    fn default_layout_covers_reference_rows() {
        let layout = default_intervals(20000);
        assert_eq!(layout[0], (1, 100));
        assert_eq!(layout[11], (1101, 1300));
        assert_eq!(layout[12], (1301, 1700));
        assert_eq!(layout[13], (1675, 20000));
        assert_eq!(default_intervals(250).last(), Some(&(201, 250)));
    }
}
