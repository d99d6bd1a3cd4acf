use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

/// `M2 / e` against `M1 / v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HvComparison {
    #[serde(with = "ratio_string")]
    pub lhs: Rational64,
    #[serde(with = "ratio_string")]
    pub rhs: Rational64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZagrebReport {
    /// Sum of squared degrees.
    pub m1: u64,
    /// Sum over edges of the product of end degrees.
    pub m2: u64,
    pub e_count: u64,
    pub v_count: u64,
    /// Absent for edgeless graphs.
    pub hv: Option<HvComparison>,
}

pub fn zagreb_report(graph: &SimpleGraph) -> ZagrebReport {
    let degrees: Vec<u64> = graph.degrees().into_iter().map(|d| d as u64).collect();
    let m1 = degrees.iter().map(|d| d * d).sum();
    let edges = graph.edges();
    let m2 = edges.iter().map(|&(u, v)| degrees[u] * degrees[v]).sum();
    let (e_count, v_count) = (edges.len() as u64, graph.n_vertices() as u64);
    let hv = (e_count > 0).then(|| {
        let lhs = Rational64::new(m2 as i64, e_count as i64);
        let rhs = Rational64::new(m1 as i64, v_count as i64);
        HvComparison { holds: lhs >= rhs, lhs, rhs }
    });
    ZagrebReport { m1, m2, e_count, v_count, hv }
}

/// `(M1, M2)` of `K_{a*b}`: `a(a-1)^2 b^3` and `a(a-1)^3 b^4 / 2`.
pub fn zagreb_closed_form(a: u64, b: u64) -> (u64, u64) {
    let d = a.saturating_sub(1);
    let twice_m2 = a * d.pow(3) * b.pow(4);
    assert!(twice_m2 % 2 == 0, "a(a-1) is even");
    (a * d * d * b.pow(3), twice_m2 / 2)
}

mod ratio_string {
    use num_rational::Rational64;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        let (n, den) = text.split_once('/').ok_or_else(|| D::Error::custom("expected num/den"))?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(D::Error::custom);
        let den = parse(den)?;
        if den == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational64::new(parse(n)?, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Degree-sum oracle for K_{a*b}: every vertex has degree b(a-1).
    fn oracle(a: u64, b: u64) -> (u64, u64) {
        let n = a * b;
        let deg = b * (a - 1);
        let edges = n * deg / 2;
        (n * deg * deg, edges * deg * deg)
    }

    #[test]
    fn closed_form_matches_degree_sums() {
        assert_eq!(zagreb_closed_form(3, 2), (96, 192));
        assert_eq!(oracle(3, 2), (96, 192));
        for a in 1..8 {
            for b in 1..6 {
                assert_eq!(zagreb_closed_form(a, b), oracle(a, b));
                let g = SimpleGraph::complete_multipartite(&vec![b as usize; a as usize]);
                let r = zagreb_report(&g);
                assert_eq!((r.m1, r.m2), oracle(a, b));
            }
        }
        assert_eq!(zagreb_closed_form(1, 4).0, 0);
    }

    #[test]
    fn edgeless_and_path() {
        let r = zagreb_report(&SimpleGraph::empty(3));
        assert_eq!((r.m1, r.m2, r.hv), (0, 0, None));
        // path on 3 vertices: degrees 1,2,1
        let p = zagreb_report(&SimpleGraph::from_edges(3, [(0, 1), (1, 2)]));
        assert_eq!((p.m1, p.m2), (6, 4));
        let hv = p.hv.unwrap();
        assert_eq!((hv.lhs, hv.rhs), (Rational64::new(2, 1), Rational64::new(2, 1)));
        assert!(hv.holds);
    }

    #[test]
    fn ratio_json() {
        let r = zagreb_report(&SimpleGraph::complete(4));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"lhs\":\"9/1\""), "{json}");
        let back: ZagrebReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
