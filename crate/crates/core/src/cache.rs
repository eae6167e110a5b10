//! Persisting the memoized coefficient tables.
//!
//! The file is line-oriented UTF-8: a version header, then one
//! `kind<TAB>key<TAB>value` line per entry. Keys are two partitions joined by
//! `;`; values are either an integer or space-separated `partition:coeff`
//! pairs. A file with a different header is ignored.

use std::fmt::Display;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;

use crate::text::parse_partition;
use crate::{characters, lr, plethysm, Partition};

pub const HEADER: &str = "# symtwist-cache v1";
pub const FILE_NAME: &str = "tables.txt";

fn table_text<C: Display>(rows: &[(Partition, C)]) -> String {
    rows.iter().map(|(p, c)| format!("{p}:{c}")).collect::<Vec<_>>().join(" ")
}

fn parse_table<C: FromStr>(text: &str) -> Option<Vec<(Partition, C)>> {
    text.split_whitespace()
        .map(|item| {
            let (p, c) = item.rsplit_once(':')?;
            Some((parse_partition(p).ok()?, c.parse().ok()?))
        })
        .collect()
}

fn parse_key(text: &str) -> Option<(Partition, Partition)> {
    let (a, b) = text.split_once(';')?;
    Some((parse_partition(a).ok()?, parse_partition(b).ok()?))
}

/// Writes every table computed so far into `dir/tables.txt`.
pub fn save(dir: &Path) -> io::Result<()> {
    let mut out = String::from(HEADER);
    out.push('\n');
    let mut line = |kind: &str, key: &(Partition, Partition), value: String| {
        out.push_str(&format!("{kind}\t{};{}\t{value}\n", key.0, key.1));
    };
    let (products, skews) = lr::export();
    for (k, t) in &products {
        line("lr", k, table_text(t));
    }
    for (k, t) in &skews {
        line("skew", k, table_text(t));
    }
    let (chars, krons) = characters::export();
    for (k, v) in &chars {
        line("char", k, v.to_string());
    }
    for (k, t) in &krons {
        line("kron", k, table_text(t));
    }
    for (k, t) in &plethysm::export() {
        line("pleth", k, table_text(t));
    }
    fs::create_dir_all(dir)?;
    fs::write(dir.join(FILE_NAME), out)
}

/// Loads `dir/tables.txt` if present and current; returns the number of
/// entries imported. Malformed lines are skipped.
pub fn load(dir: &Path) -> io::Result<usize> {
    let text = match fs::read_to_string(dir.join(FILE_NAME)) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Ok(0);
    }
    let mut count = 0;
    for l in lines {
        let mut fields = l.splitn(3, '\t');
        let (Some(kind), Some(key), Some(value)) = (fields.next(), fields.next(), fields.next()) else {
            continue;
        };
        let Some(key) = parse_key(key) else { continue };
        let ok = match kind {
            "lr" => parse_table(value).map(|t| lr::import_product(key, t)).is_some(),
            "skew" => parse_table(value).map(|t| lr::import_skew(key, t)).is_some(),
            "char" => value.parse().map(|v| characters::import_character(key, v)).is_ok(),
            "kron" => parse_table(value).map(|t| characters::import_kronecker(key, t)).is_some(),
            "pleth" => parse_table(value).map(|t| plethysm::import(key, t)).is_some(),
            _ => false,
        };
        count += ok as usize;
    }
    Ok(count)
}
