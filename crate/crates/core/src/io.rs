//! Text, JSON and CSV formats.
//!
//! JSON is the machine format and is emitted compactly. The text format prints
//! intervals as `[a,b]` and orders as sorted cover pairs `g>l`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, BasicModule, Interval, Vertex};
use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::order::PartialOrder;
use crate::qhs::{enumerate_qhs, QhsStrategy};

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("library types serialize to JSON")
}

pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// JSON object or inline `n:l1,l2,...`.
pub fn parse_algebra(s: &str) -> Result<AlgebraSpec> {
    let s = s.trim();
    if s.starts_with('{') {
        from_json(s)
    } else {
        AlgebraSpec::parse_inline(s)
    }
}

pub fn parse_interval(s: &str) -> Result<Interval> {
    let bad = || Error::Parse(format!("expected [a,b], got {s:?}"));
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let a: Vertex = a.trim().parse().map_err(|_| bad())?;
    let b: Vertex = b.trim().parse().map_err(|_| bad())?;
    Interval::try_from([a, b]).map_err(Error::Parse)
}

/// JSON list of pairs, or whitespace-separated `[a,b]` tokens.
pub fn parse_modules(s: &str) -> Result<BasicModule> {
    let s = s.trim();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.starts_with("[[") || compact == "[]" {
        return from_json(s);
    }
    let mut out = Vec::new();
    let mut rest = s;
    while let Some(open) = rest.find('[') {
        let close = rest[open..]
            .find(']')
            .ok_or_else(|| Error::Parse(format!("unclosed interval in {s:?}")))?
            + open;
        if !rest[..open].trim().is_empty() {
            return Err(Error::Parse(format!(
                "unexpected text {:?}",
                rest[..open].trim()
            )));
        }
        out.push(parse_interval(&rest[open..=close])?);
        rest = &rest[close + 1..];
    }
    if !rest.trim().is_empty() {
        return Err(Error::Parse(format!("unexpected text {:?}", rest.trim())));
    }
    Ok(BasicModule::new(out))
}

/// JSON object, or the text form on `[start, end]`: cover pairs `g>l`
/// separated by whitespace or commas, or `(discrete on [s,e])`.
pub fn parse_order(s: &str, start: Vertex, end: Vertex) -> Result<PartialOrder> {
    let s = s.trim();
    if s.starts_with('{') {
        return from_json(s);
    }
    if let Some(range) = s
        .strip_prefix("(discrete on ")
        .and_then(|r| r.strip_suffix(')'))
    {
        let iv = parse_interval(range)?;
        return Ok(PartialOrder::discrete(iv.top, iv.socle));
    }
    let pairs = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (g, l) = t
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("expected g>l, got {t:?}")))?;
            let parse = |v: &str| {
                v.parse::<Vertex>()
                    .map_err(|_| Error::Parse(format!("bad vertex {v:?}")))
            };
            Ok((parse(g)?, parse(l)?))
        })
        .collect::<Result<Vec<_>>>()?;
    PartialOrder::from_relations(start, end, &pairs)
}

/// One row of a count table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    /// Relation vertices separated by spaces.
    pub relations: String,
    pub tilt_count: u128,
    /// Left empty when `n` exceeds the enumeration bound.
    pub qhs_count: Option<u128>,
}

/// Counts for every algebra with at most `max_n` vertices; structures are
/// enumerated for `n <= enumerate_up_to`.
pub fn count_table(max_n: usize, enumerate_up_to: usize) -> Result<Vec<CountRow>> {
    let mut table = CountTable::new();
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for alg in AlgebraSpec::all_with_vertices(n) {
            let qhs_count = if n <= enumerate_up_to {
                Some(enumerate_qhs(&alg, QhsStrategy::ViaTilting)?.len() as u128)
            } else {
                None
            };
            let relations = alg
                .relations()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            rows.push(CountRow {
                n,
                relations,
                tilt_count: table.count(&alg),
                qhs_count,
            });
        }
    }
    Ok(rows)
}

pub fn count_rows_csv(rows: &[CountRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows serialize to CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
}

pub fn parse_count_rows(s: &str) -> Result<Vec<CountRow>> {
    csv::Reader::from_reader(s.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<CountRow>, _>>()
        .map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gluing::AdmissibleSequence;
    use crate::tree::BinaryTree;

    #[test]
    fn algebra_round_trips() {
        for alg in AlgebraSpec::all_with_vertices(6) {
            assert_eq!(parse_algebra(&alg.inline()).unwrap(), alg);
            assert_eq!(parse_algebra(&to_json(&alg)).unwrap(), alg);
        }
        assert_eq!(parse_algebra("5:").unwrap(), AlgebraSpec::path(5));
        assert!(parse_algebra("5:1").is_err());
        assert!(parse_algebra("x").is_err());
    }

    #[test]
    fn module_round_trips() {
        let alg = AlgebraSpec::new(10, [5, 6, 7, 9]).unwrap();
        let m = alg.indecomposables();
        assert_eq!(parse_modules(&m.to_string()).unwrap(), m);
        assert_eq!(parse_modules(&to_json(&m)).unwrap(), m);
        let t = parse_modules("[[1,1],[1,3],[3,3],[1,5],[5,5]]").unwrap();
        assert_eq!(t.to_string(), "[1,1] [1,3] [1,5] [3,3] [5,5]");
        assert!(parse_modules("[1,1] junk").is_err());
        assert!(parse_modules("[3,1]").is_err());
        assert!(parse_modules("[]").unwrap().is_empty());
    }

    #[test]
    fn order_round_trips() {
        let o = PartialOrder::from_relations(1, 4, &[(2, 1), (2, 3), (4, 3)]).unwrap();
        assert_eq!(o.to_string(), "2>1 2>3 4>3");
        assert_eq!(parse_order(&o.to_string(), 1, 4).unwrap(), o);
        assert_eq!(parse_order(&to_json(&o), 1, 4).unwrap(), o);
        let d = PartialOrder::discrete(1, 3);
        assert_eq!(parse_order(&d.to_string(), 1, 3).unwrap(), d);
        assert!(parse_order("1>2 2>1", 1, 2).is_err());
    }

    #[test]
    fn tree_and_sequence_round_trip() {
        for t in BinaryTree::all(1, 5) {
            assert_eq!(from_json::<BinaryTree>(&to_json(&t)).unwrap(), t);
        }
        let alg = AlgebraSpec::new(7, [3, 4, 5]).unwrap();
        for seq in crate::gluing::all_admissible_sequences(&alg) {
            assert_eq!(
                from_json::<AdmissibleSequence>(&to_json(&seq)).unwrap(),
                seq
            );
        }
    }

    #[test]
    fn csv_rows() {
        let rows = count_table(4, 4).unwrap();
        let text = count_rows_csv(&rows);
        assert!(text.starts_with("n,relations,tilt_count,qhs_count\n1,,1,1\n"));
        assert!(text.contains("\n4,2 3,4,4\n"));
        assert_eq!(parse_count_rows(&text).unwrap(), rows);
        let partial = count_table(2, 1).unwrap();
        assert!(count_rows_csv(&partial).ends_with("2,,2,\n"));
    }
}
