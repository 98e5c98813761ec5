use std::fmt::Write;

use clap::ValueEnum;
use polywedge::census::{CensusReport, ClassCount};
use polywedge::oracle::VerificationReport;
use polywedge::{DJClass, ESeq, ESet, PuzzleGrid};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A flat record: JSON body, CSV header/row, or a single text line.
pub fn value(format: Format, body: Value, fields: &[(&str, String)], text: String) -> String {
    match format {
        Format::Json => to_json(&body),
        Format::Csv => {
            let head: Vec<String> = fields.iter().map(|(k, _)| csv_field(k)).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| csv_field(v)).collect();
            format!("{}\n{}", head.join(","), row.join(","))
        }
        Format::Text => text,
    }
}

pub fn nodes(m: usize, classes: &[DJClass], format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({"m": m, "count": classes.len(), "classes": classes})),
        Format::Csv => {
            let mut s = String::from("index,class");
            for (i, c) in classes.iter().enumerate() {
                write!(s, "\n{},{c}", i + 1).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("{} classes over the {m}-gon", classes.len());
            for c in classes {
                write!(s, "\n{c}").unwrap();
            }
            s
        }
    }
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

pub fn dot(m: usize, classes: &[DJClass], edges: &[(DJClass, DJClass, usize)]) -> String {
    let mut s = format!("graph wedge_diagram_{m} {{\n  node [shape=box, fontname=monospace];\n");
    for c in classes {
        writeln!(s, "  \"{c}\";").unwrap();
    }
    for (a, b, p) in edges {
        let color = PALETTE[(p - 1) % PALETTE.len()];
        writeln!(
            s,
            "  \"{a}\" -- \"{b}\" [label=\"{p}\", color=\"{color}\"];"
        )
        .unwrap();
    }
    s.push('}');
    s
}

pub fn edges(class: &DJClass, rows: &[(ESet, DJClass)], format: Format) -> String {
    match format {
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(e, t)| json!({"p": e.base, "eset": e, "target": t}))
                .collect();
            to_json(&json!({"lambda": class, "edges": list}))
        }
        Format::Csv => {
            let mut s = String::from("p,eset,target");
            for (e, t) in rows {
                write!(s, "\n{},{},{t}", e.base, csv_field(&e.to_string())).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("edges at {class}");
            for (e, t) in rows {
                write!(s, "\n{:>3}  {:<24} {t}", e.base, e.to_string()).unwrap();
            }
            s
        }
    }
}

fn sorted(rows: &[ClassCount]) -> Vec<&ClassCount> {
    let mut v: Vec<&ClassCount> = rows.iter().collect();
    v.sort_by_key(|r| r.class.to_string());
    v
}

fn report_text(r: &CensusReport, real_toric: bool) -> String {
    let rt = r
        .real_toric
        .as_ref()
        .map_or_else(|| "n/a".to_string(), ToString::to_string);
    let mut s = if real_toric {
        format!(
            "{rt}\nmethod: {}, m: {}, J: ({}), small covers: {}",
            r.method, r.m, r.j, r.total
        )
    } else {
        format!(
            "{}\nmethod: {}, m: {}, J: ({}), real toric: {rt}",
            r.total, r.method, r.m, r.j
        )
    };
    let rows = sorted(&r.per_class);
    if !rows.is_empty() {
        s.push_str("\nclass count count_rt");
        for row in rows {
            write!(s, "\n{} {} {}", row.class, row.count, row.count_rt).unwrap();
        }
    }
    s
}

fn report_csv(reports: &[CensusReport]) -> String {
    let many = reports.len() > 1;
    let mut s = String::from(if many {
        "class,count,count_rt,method"
    } else {
        "class,count,count_rt"
    });
    for r in reports {
        let suffix = if many {
            format!(",{}", r.method)
        } else {
            String::new()
        };
        for row in sorted(&r.per_class) {
            write!(s, "\n{},{},{}{suffix}", row.class, row.count, row.count_rt).unwrap();
        }
        let rt = r
            .real_toric
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        write!(s, "\ntotal,{},{rt}{suffix}", r.total).unwrap();
    }
    s
}

fn reports_with(reports: &[CensusReport], format: Format, real_toric: bool) -> String {
    match format {
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(&reports),
        Format::Csv => report_csv(reports),
        Format::Text => reports
            .iter()
            .map(|r| report_text(r, real_toric))
            .collect::<Vec<_>>()
            .join("\n\n"),
    }
}

pub fn reports(reports: &[CensusReport], format: Format) -> String {
    reports_with(reports, format, false)
}

pub fn real_toric_reports(reports: &[CensusReport], format: Format) -> String {
    reports_with(reports, format, true)
}

pub fn verification(r: &VerificationReport, format: Format) -> String {
    let formula = r.formula.as_ref().map(ToString::to_string);
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut s = String::from("m,j,diagram,formula,bruteforce,agree");
            write!(
                s,
                "\n{},{},{},{},{},{}",
                r.m,
                csv_field(&r.j.to_string()),
                r.diagram,
                formula.clone().unwrap_or_default(),
                r.bruteforce,
                r.agree
            )
            .unwrap();
            s
        }
        Format::Text => {
            let mut s = format!("m: {}\nJ: ({})\ndiagram: {}\n", r.m, r.j, r.diagram);
            writeln!(s, "formula: {}", formula.unwrap_or_else(|| "n/a".into())).unwrap();
            writeln!(s, "bruteforce: {}", r.bruteforce).unwrap();
            write!(s, "agree: {}", r.agree).unwrap();
            if let Some(w) = &r.witness {
                write!(
                    s,
                    "\nwitness: {} = {} vs {} = {}",
                    w.first, w.first_value, w.second, w.second_value
                )
                .unwrap();
            }
            s
        }
    }
}

pub fn grid(class: &DJClass, seq: &ESeq, grid: &PuzzleGrid, format: Format) -> String {
    let alpha = |a: &[u32]| a.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    match format {
        Format::Json => to_json(&json!({"lambda": class, "eseq": seq, "grid": grid})),
        Format::Csv => {
            let mut s = String::from("alpha,class");
            for (a, c) in grid.iter() {
                write!(s, "\n{},{c}", csv_field(&alpha(&a))).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("puzzle of {class} over J=({}) with {seq}", grid.j());
            for (a, c) in grid.iter() {
                write!(s, "\n({}) {c}", alpha(&a)).unwrap();
            }
            s
        }
    }
}
