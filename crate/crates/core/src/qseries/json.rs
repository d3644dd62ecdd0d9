use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, LaurentX, NomeSeries, Rational};
use crate::error::{Error, Result};

/// Wire form of a [`NomeSeries`]. Field order is fixed, so serialization is
/// byte-for-byte deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesJson {
    pub level: i64,
    pub grid_denominator: u64,
    pub lead: String,
    pub order: u64,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub n: u64,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub j: i64,
    pub c: String,
}

impl From<&NomeSeries> for SeriesJson {
    fn from(s: &NomeSeries) -> Self {
        let coeffs = s
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| CoeffJson {
                n: n as u64,
                terms: c.iter().map(|(j, c)| TermJson { j, c: format_rational(c) }).collect(),
            })
            .collect();
        SeriesJson {
            level: s.level(),
            grid_denominator: s.grid(),
            lead: format_rational(s.lead()),
            order: s.trunc() as u64,
            coeffs,
        }
    }
}

impl TryFrom<&SeriesJson> for NomeSeries {
    type Error = Error;

    fn try_from(j: &SeriesJson) -> Result<NomeSeries> {
        if j.grid_denominator == 0 {
            return Err(Error::Encoding("gridDenominator must be positive".into()));
        }
        let lead: Rational = parse_rational(&j.lead)?;
        let mut coeffs = vec![LaurentX::zero(); j.order as usize + 1];
        for c in &j.coeffs {
            let slot = coeffs
                .get_mut(c.n as usize)
                .ok_or_else(|| Error::Encoding(format!("coefficient index {} beyond order {}", c.n, j.order)))?;
            for t in &c.terms {
                slot.add_term(t.j, parse_rational(&t.c)?);
            }
        }
        Ok(NomeSeries::new(j.level, j.grid_denominator, lead, coeffs))
    }
}

impl NomeSeries {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson::from(self)
    }

    pub fn from_json(j: &SeriesJson) -> Result<NomeSeries> {
        NomeSeries::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{int, rat};

    #[test]
    fn round_trip() {
        let s = NomeSeries::from_sparse(
            3,
            4,
            rat(-1, 24),
            rat(3, 1),
            [(rat(-1, 24), 1, rat(2, 3)), (rat(5, 24), -1, int(-7)), (rat(47, 24), 4, rat(1, 5))],
        )
        .unwrap();
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back: SeriesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(NomeSeries::from_json(&back).unwrap(), s);
        assert!(text.starts_with("{\"level\":3,\"gridDenominator\":4,\"lead\":\"-1/24\",\"order\":"));
        assert!(text.contains("\"c\":\"-7/1\""));
    }

    #[test]
    fn rejects_out_of_range_index() {
        let j = SeriesJson {
            level: 0,
            grid_denominator: 1,
            lead: "0/1".into(),
            order: 1,
            coeffs: vec![CoeffJson { n: 5, terms: vec![] }],
        };
        assert!(NomeSeries::from_json(&j).is_err());
    }
}
