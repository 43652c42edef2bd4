//! Batch quintic analysis behind the `qcurve analyze` command.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use qcurve_core::exact::{format_rational, parse_rational, Rational, Ring};
use qcurve_core::localfield;
use qcurve_core::quintic::{self, Quintic};
use qcurve_core::report::{Check, Status, VerificationReport, VerifyOptions};
use qcurve_core::Error;

/// One input line: exact rationals as strings, e.g. `{"B":"4","C":"16/5"}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
pub struct QuinticRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
}

impl QuinticRecord {
    pub fn quintic(&self) -> Result<Quintic, Error> {
        let a = match &self.a {
            Some(a) => parse_rational(a)?,
            None => Rational::zero(),
        };
        Ok(Quintic::new(a, parse_rational(&self.b)?, parse_rational(&self.c)?))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Analysis {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    pub delta: String,
    pub gamma4: String,
    pub gamma6: String,
    pub disc: String,
    pub j_candidates: Option<[String; 2]>,
    pub j_cofactor: Option<String>,
    pub t: Option<String>,
    pub hypothesis: Option<bool>,
    pub errors: Vec<String>,
}

/// Parses JSON lines, skipping blank lines. Any malformed line fails the batch.
pub fn parse_records(text: &str) -> Result<Vec<QuinticRecord>, Error> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| {
            let rec: QuinticRecord = serde_json::from_str(l)
                .map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?;
            rec.quintic().map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?;
            Ok(rec)
        })
        .collect()
}

/// Degenerate inputs are reported in `errors`, never as a failure of the batch.
pub fn analyze(q: &Quintic, label: Option<String>) -> Analysis {
    let inv = quintic::invariants(q);
    let mut errors = Vec::new();
    let (j_candidates, j_cofactor) = match quintic::j_candidates(q) {
        Ok(jc) => (
            Some(jc.roots.clone().map(|r| r.to_string())),
            Some(format_rational(&jc.cofactor)),
        ),
        Err(e) => {
            errors.push(format!("j_candidates: {e}"));
            (None, None)
        }
    };
    let (t, hypothesis) = if q.a.is_zero() {
        match quintic::trinomial_t(&q.b, &q.c) {
            Ok(t) => {
                let h = t.as_ref().is_some_and(localfield::is_square_5adic_unit);
                (t.as_ref().map(format_rational), Some(h))
            }
            Err(e) => {
                errors.push(format!("t: {e}"));
                (None, None)
            }
        }
    } else {
        (None, None)
    };
    Analysis {
        label,
        a: format_rational(&q.a),
        b: format_rational(&q.b),
        c: format_rational(&q.c),
        delta: format_rational(&inv.delta),
        gamma4: format_rational(&inv.gamma4),
        gamma6: format_rational(&inv.gamma6),
        disc: format_rational(&inv.disc),
        j_candidates,
        j_cofactor,
        t,
        hypothesis,
        errors,
    }
}

/// Analyses in input order, with one report check per record.
pub fn analyze_batch(records: &[QuinticRecord]) -> Result<(VerificationReport, Vec<Analysis>), Error> {
    let quintics = records.iter().map(|r| r.quintic()).collect::<Result<Vec<_>, _>>()?;
    let analyses: Vec<Analysis> = quintics
        .par_iter()
        .zip(records.par_iter())
        .map(|(q, r)| analyze(q, r.label.clone()))
        .collect();
    let mut report = VerificationReport::new("analyze", &VerifyOptions::default());
    report.options.clear();
    for (k, a) in analyses.iter().enumerate() {
        let id = a.label.clone().unwrap_or_else(|| format!("record{}", k + 1));
        let (status, witness) = if a.errors.is_empty() {
            let t = a.t.as_deref().unwrap_or("none");
            (Status::Pass, format!("t={t}"))
        } else {
            (Status::Skipped, a.errors.join("; "))
        };
        report.checks.push(Check {
            id,
            description: format!("x^5 + ({})x^2 + ({})x + ({})", a.a, a.b, a.c),
            status,
            witness: Some(witness),
        });
    }
    report.status = if report.passed() { Status::Pass } else { Status::Fail };
    Ok((report, analyses))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(line: &str) -> Analysis {
        let recs = parse_records(line).unwrap();
        analyze_batch(&recs).unwrap().1.remove(0)
    }

    #[test]
    fn buhler_record() {
        let a = one(r#"{"B":"4","C":"16/5"}"#);
        assert_eq!(a.t.as_deref(), Some("1"));
        assert_eq!(a.hypothesis, Some(true));
        assert_eq!(a.disc, "589824");
        assert!(a.errors.is_empty());
    }

    #[test]
    fn original_trinomial_record() {
        let a = one(r#"{"B":"20","C":"-16"}"#);
        assert_eq!(a.t.as_deref(), Some("3/5"));
        assert_eq!(a.hypothesis, Some(false));
    }

    #[test]
    fn zero_c_is_an_error_record() {
        let a = one(r#"{"B":"1","C":"0"}"#);
        assert!(a.errors.iter().any(|e| e.contains("C must be nonzero for t")));
        assert_eq!(a.t, None);
    }

    #[test]
    fn parse_failures() {
        assert!(parse_records(r#"{"B":"1.5","C":"1"}"#).is_err());
        assert!(parse_records(r#"{"B":"1"}"#).is_err());
        assert!(parse_records("not json").is_err());
        assert!(parse_records(r#"{"B":"1","C":"1/0"}"#).is_err());
    }

    #[test]
    fn order_is_input_order() {
        let text = (1..=12).map(|k| format!("{{\"label\":\"q{k}\",\"B\":\"{k}\",\"C\":\"1\"}}\n")).collect::<String>();
        let (report, analyses) = analyze_batch(&parse_records(&text).unwrap()).unwrap();
        let labels: Vec<_> = analyses.iter().map(|a| a.label.clone().unwrap()).collect();
        assert_eq!(labels, (1..=12).map(|k| format!("q{k}")).collect::<Vec<_>>());
        assert_eq!(report.checks[3].id, "q4");
    }
}
