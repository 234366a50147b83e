//! Check outcome records. One report per (check, parameter) combination;
//! a failing report carries the rendered nonzero difference as its witness.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

/// A parameter value: integers for p, n and similar; strings for indices,
/// words, and flags.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Str(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Str(s) => write!(f, "{s}"),
        }
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// Convenience constructor for a parameter map.
pub fn params<const N: usize>(entries: [(&str, ParamValue); N]) -> Params {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// The outcome of one congruence check at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Params,
    pub pass: bool,
    pub witness: Option<String>,
    pub ms: f64,
}

impl CheckReport {
    /// Build a report; the witness is recorded only on failure.
    pub fn finish(
        check: &str,
        params: Params,
        pass: bool,
        witness: impl fmt::Display,
        started: Instant,
    ) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            pass,
            witness: if pass { None } else { Some(witness.to_string()) },
            ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// A check whose hypotheses exclude this parameter point. Counts as a
    /// non-failure so sweep totals stay predictable.
    pub fn skipped(check: &str, mut params: Params, reason: &str) -> Self {
        params.insert("skipped".to_string(), ParamValue::Str(reason.to_string()));
        CheckReport {
            check: check.to_string(),
            params,
            pass: true,
            witness: None,
            ms: 0.0,
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.params.contains_key("skipped")
    }

    pub fn param_int(&self, key: &str) -> Option<i64> {
        match self.params.get(key) {
            Some(ParamValue::Int(v)) => Some(*v),
            _ => None,
        }
    }

    /// "key=value;key=value" over all parameters, in key order.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Deterministic report order: by check name, then parameters, then
    /// prime and precision.
    pub fn sort_key(&self) -> (String, String, i64, i64) {
        (
            self.check.clone(),
            self.params_string(),
            self.param_int("p").unwrap_or(0),
            self.param_int("n").unwrap_or(0),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_only_on_failure() {
        let t0 = Instant::now();
        let ok = CheckReport::finish("c", Params::new(), true, "3", t0);
        assert_eq!(ok.witness, None);
        let bad = CheckReport::finish("c", Params::new(), false, "3", t0);
        assert_eq!(bad.witness.as_deref(), Some("3"));
    }

    #[test]
    fn skip_is_marked_and_passing() {
        let r = CheckReport::skipped("c", params([("p", ParamValue::Int(2))]), "needs odd p");
        assert!(r.pass);
        assert!(r.is_skipped());
        assert_eq!(r.params_string(), "p=2;skipped=needs odd p");
    }
}
