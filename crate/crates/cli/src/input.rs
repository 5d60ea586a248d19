use std::fs;
use std::path::Path;

use gizatullin::dpd::{DpdPair, QDivisor};
use gizatullin::Rational;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"d_plus": [["0", "-1/3"]], "d_minus": [["1", "-2"]]}`; points and
/// coefficients are strings so rationals stay exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub d_plus: Vec<(String, String)>,
    #[serde(default)]
    pub d_minus: Vec<(String, String)>,
}

impl InputDocument {
    pub fn from_pair(pair: &DpdPair) -> InputDocument {
        let terms = |d: &QDivisor| d.iter().map(|(p, c)| (p.to_string(), c.to_string())).collect();
        InputDocument { d_plus: terms(pair.d_plus()), d_minus: terms(pair.d_minus()) }
    }

    pub fn to_pair(&self) -> Result<DpdPair, CliError> {
        let div = |terms: &[(String, String)], which: &str| -> Result<QDivisor, CliError> {
            let parsed = terms
                .iter()
                .map(|(p, c)| {
                    let p: Rational = p.parse().map_err(|e| CliError::Input(format!("{which}: {e}")))?;
                    let c: Rational = c.parse().map_err(|e| CliError::Input(format!("{which}: {e}")))?;
                    Ok((p, c))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            QDivisor::new(parsed).map_err(|e| CliError::Input(format!("{which}: {e}")))
        };
        let pair = DpdPair::new(div(&self.d_plus, "d_plus")?, div(&self.d_minus, "d_minus")?)?;
        Ok(pair)
    }
}

pub fn read_pair(path: &Path) -> Result<DpdPair, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let doc: InputDocument =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    doc.to_pair()
}
