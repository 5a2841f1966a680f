//! Knot-table files: one `name: PD[...]` per line, `#` starts a comment.

use crate::diagram::{DiagramError, PdCode};

/// Bundled table: unknot kink, both trefoils, 4_1, 5_1, 5_2, 6_1.
pub const BUILTIN: &str = include_str!("../data/knots.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    /// 1-based line number in the source text.
    pub line: usize,
    pub name: String,
    pub pd: Result<PdCode, DiagramError>,
}

/// Parses every non-blank, non-comment line; malformed lines become error
/// entries rather than failing the table.
pub fn parse_table(text: &str) -> Vec<TableEntry> {
    text.lines()
        .enumerate()
        .filter_map(|(k, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                return None;
            }
            let entry = match line.split_once(':') {
                Some((name, pd)) => TableEntry { line: k + 1, name: name.trim().to_string(), pd: pd.parse() },
                None => TableEntry {
                    line: k + 1,
                    name: line.to_string(),
                    pd: Err(DiagramError::Syntax { pos: 0, msg: "expected `name: PD[...]`".into() }),
                },
            };
            Some(entry)
        })
        .collect()
}

/// The bundled diagrams, in file order.
pub fn builtin() -> Vec<(String, PdCode)> {
    parse_table(BUILTIN)
        .into_iter()
        .map(|e| (e.name, e.pd.expect("bundled table is valid")))
        .collect()
}

/// A bundled diagram by name.
pub fn get(name: &str) -> Option<PdCode> {
    builtin().into_iter().find(|(n, _)| n == name).map(|(_, pd)| pd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table_parses() {
        let names: Vec<String> = builtin().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["unknot", "3_1_lh", "3_1_rh", "4_1", "5_1", "5_2", "6_1"]);
        assert_eq!(get("3_1_rh").unwrap(), get("3_1_lh").unwrap().mirror());
    }

    #[test]
    fn malformed_lines_are_isolated() {
        let t = parse_table("# header\n\na: PD[X[1,1,2,2]]\nbroken line\nb: PD[X[1,2]]  # trailing\n");
        assert_eq!(t.len(), 3);
        assert!(t[0].pd.is_ok());
        assert_eq!((t[1].line, t[1].pd.is_err()), (4, true));
        assert!(t[2].pd.is_err());
        assert!(parse_table("").is_empty());
    }
}
