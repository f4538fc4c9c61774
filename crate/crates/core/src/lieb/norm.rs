use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Unitarily invariant norms, evaluated as symmetric gauge functions of the
/// singular values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormKind {
    Operator,
    Trace,
    Frobenius,
    SchattenP(f64),
    KyFan(usize),
}

impl NormKind {
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            NormKind::SchattenP(p) if !(p >= 1.0 && p.is_finite()) => {
                Err(Error::InvalidArgument(format!("Schatten exponent {p} must be finite and >= 1")))
            }
            NormKind::KyFan(0) => Err(Error::InvalidArgument("Ky Fan order must be >= 1".into())),
            _ => Ok(()),
        }
    }

    /// Evaluates the gauge function on singular values sorted descending.
    pub fn eval_singular(&self, sigma: &[f64]) -> f64 {
        match *self {
            NormKind::Operator => sigma.first().copied().unwrap_or(0.0),
            NormKind::Trace => sigma.iter().sum(),
            NormKind::Frobenius => sigma.iter().map(|s| s * s).sum::<f64>().sqrt(),
            NormKind::SchattenP(p) => {
                let top = sigma.first().copied().unwrap_or(0.0);
                if top == 0.0 {
                    return 0.0;
                }
                top * sigma.iter().map(|s| (s / top).powf(p)).sum::<f64>().powf(1.0 / p)
            }
            NormKind::KyFan(k) => sigma.iter().take(k).sum(),
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormKind::Operator => write!(f, "operator"),
            NormKind::Trace => write!(f, "trace"),
            NormKind::Frobenius => write!(f, "frobenius"),
            NormKind::SchattenP(p) => write!(f, "schatten({p})"),
            NormKind::KyFan(k) => write!(f, "kyfan({k})"),
        }
    }
}

/// Parses `name(x)` or `namex` into `x`.
pub(crate) fn parameter<'a>(text: &'a str, name: &str) -> Option<&'a str> {
    let rest = text.strip_prefix(name)?;
    let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    (!rest.is_empty()).then_some(rest)
}

impl FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::InvalidArgument(format!("unknown norm '{s}'"));
        let kind = match s.as_str() {
            "operator" | "spectral" => NormKind::Operator,
            "trace" | "nuclear" => NormKind::Trace,
            "frobenius" => NormKind::Frobenius,
            _ => {
                if let Some(p) = parameter(&s, "schatten") {
                    NormKind::SchattenP(p.parse().map_err(|_| bad())?)
                } else if let Some(k) = parameter(&s, "kyfan") {
                    NormKind::KyFan(k.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauge_values() {
        let s = [2.0, 1.0, 1.0];
        assert_eq!(NormKind::Operator.eval_singular(&s), 2.0);
        assert_eq!(NormKind::Trace.eval_singular(&s), 4.0);
        assert!((NormKind::Frobenius.eval_singular(&s) - 6f64.sqrt()).abs() < 1e-15);
        assert_eq!(NormKind::KyFan(2).eval_singular(&s), 3.0);
        assert_eq!(NormKind::KyFan(7).eval_singular(&s), 4.0);
        assert!((NormKind::SchattenP(3.0).eval_singular(&s) - 10f64.cbrt()).abs() < 1e-14);
        assert!((NormKind::SchattenP(2.0).eval_singular(&s) - 6f64.sqrt()).abs() < 1e-14);
        assert_eq!(NormKind::SchattenP(3.0).eval_singular(&[0.0, 0.0]), 0.0);
    }

    #[test]
    fn names_round_trip() {
        for k in [NormKind::Operator, NormKind::Trace, NormKind::Frobenius, NormKind::SchattenP(3.0), NormKind::KyFan(2)] {
            assert_eq!(k.to_string().parse::<NormKind>().unwrap(), k);
        }
        assert_eq!("kyfan2".parse::<NormKind>().unwrap(), NormKind::KyFan(2));
        assert!("schatten(0.5)".parse::<NormKind>().is_err());
        assert!("kyfan(0)".parse::<NormKind>().is_err());
        assert!("bogus".parse::<NormKind>().is_err());
    }
}
