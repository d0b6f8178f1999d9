//! Reference polygon tables shipped with the crate and their verification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::classes::fingerprint;
use crate::error::{Error, Result};
use crate::io::points_from_value;
use crate::lattice::{make_polygon, normalized_dual_volume, FanoPolygon};
use crate::mutations::is_minimal;
use crate::singularities::{degree, singularity_content, sorted_weights, CyclicQuotientSingularity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    /// Minimal triangles with only T-singularities.
    Table1,
    /// Minimal non-triangles with only T-singularities.
    Table2,
    /// Representatives of the classes with baskets `{m × 1/3(1,1)}`.
    Table4,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::Table1, TableId::Table2, TableId::Table4];

    fn sources(self) -> (&'static str, &'static str) {
        match self {
            TableId::Table1 => (include_str!("../../data/table1.json"), include_str!("../../data/table1.expected.json")),
            TableId::Table2 => (include_str!("../../data/table2.json"), include_str!("../../data/table2.expected.json")),
            TableId::Table4 => (include_str!("../../data/table4.json"), include_str!("../../data/table4.expected.json")),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::Table1 => "table1",
            TableId::Table2 => "table2",
            TableId::Table4 => "table4",
        })
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(TableId::Table1),
            "table2" => Ok(TableId::Table2),
            "table4" => Ok(TableId::Table4),
            _ => Err(Error::BadInput(format!("unknown table {s:?}; expected table1, table2 or table4"))),
        }
    }
}

/// Printed columns of a table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<[i64; 3]>,
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub degree: String,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: String,
    /// The polygon in the printed coordinates.
    pub polygon: FanoPolygon,
    pub expected: Expected,
}

pub fn table_rows(id: TableId) -> Vec<TableRow> {
    let (rows, expected) = id.sources();
    let rows: serde_json::Value = serde_json::from_str(rows).expect("bundled table parses");
    let expected: Vec<Expected> = serde_json::from_str(expected).expect("bundled sidecar parses");
    let rows = rows["rows"].as_array().expect("bundled table has rows");
    assert_eq!(rows.len(), expected.len(), "{id}: sidecar length");
    rows.iter()
        .zip(expected)
        .map(|(r, e)| {
            let name = r["name"].as_str().expect("row name").to_string();
            assert_eq!(name, e.name, "{id}: sidecar order");
            let polygon = make_polygon(&points_from_value(r).expect("bundled vertices")).expect("bundled polygon is Fano");
            TableRow { name, polygon, expected: e }
        })
        .collect()
}

pub fn table_polygons(id: TableId) -> Vec<FanoPolygon> {
    table_rows(id).into_iter().map(|r| r.polygon).collect()
}

/// Outcome for one row.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub name: String,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub table: String,
    pub rows: Vec<RowCheck>,
    /// Table-level problems, such as two rows that are not told apart.
    pub problems: Vec<String>,
}

impl TableReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty() && self.rows.iter().all(|r| r.problems.is_empty())
    }

    pub fn diagnostics(&self) -> String {
        let mut lines: Vec<String> = Vec::new();
        for r in &self.rows {
            for p in &r.problems {
                lines.push(format!("{} row {}: {p}", self.table, r.name));
            }
        }
        lines.extend(self.problems.iter().map(|p| format!("{}: {p}", self.table)));
        lines.join("\n")
    }
}

fn check_row(id: TableId, row: &TableRow) -> RowCheck {
    let p = &row.polygon;
    let e = &row.expected;
    let mut problems = Vec::new();
    let sc = singularity_content(p);
    if sc.n != e.n.into() {
        problems.push(format!("n is {}, table says {}", sc.n, e.n));
    }
    let deg = degree(p);
    if deg.to_string() != e.degree {
        problems.push(format!("degree is {deg}, table says {}", e.degree));
    }
    let vol = normalized_dual_volume(p);
    if vol != deg {
        problems.push(format!("degree {deg} differs from dual volume {vol}"));
    }
    match id {
        TableId::Table1 | TableId::Table2 => {
            if !sc.basket.is_empty() {
                problems.push(format!("basket is {sc}, expected empty"));
            }
            if !is_minimal(p) {
                problems.push("not minimal".into());
            }
        }
        TableId::Table4 => {
            let third = CyclicQuotientSingularity::from_i64(3, 1, 2).expect("valid singularity");
            if !sc.basket_only(&third) {
                problems.push(format!("basket {sc} has entries other than 1/3(1,1)"));
            }
            if let Some(m) = e.m {
                if sc.basket.len() != m {
                    problems.push(format!("m is {}, table says {m}", sc.basket.len()));
                }
            }
        }
    }
    if let Some(w) = e.weights {
        match sorted_weights(p) {
            Ok(got) if got == w => {}
            Ok(got) => problems.push(format!("weights are {got:?}, table says {w:?}")),
            Err(err) => problems.push(format!("weights unavailable: {err}")),
        }
    }
    RowCheck { name: row.name.clone(), problems }
}

/// Check every row of a bundled table against its printed columns. For the
/// class table, also check that no two rows share all mutation invariants.
pub fn verify_table(id: TableId) -> Result<TableReport> {
    let rows = table_rows(id);
    let checks = rows.iter().map(|r| check_row(id, r)).collect();
    let mut problems = Vec::new();
    if id == TableId::Table4 {
        let fps: Vec<_> = rows.iter().map(|r| fingerprint(&r.polygon)).collect();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if fps[i].differing(&fps[j]).is_none() {
                    problems.push(format!("rows {} and {} share every invariant", rows[i].name, rows[j].name));
                }
            }
        }
    }
    let report = TableReport { table: id.to_string(), rows: checks, problems };
    if report.ok() {
        Ok(report)
    } else {
        Err(Error::Mismatch(report.diagnostics()))
    }
}
