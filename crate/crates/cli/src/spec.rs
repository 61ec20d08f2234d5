//! The category input document.

use std::collections::BTreeMap;

use fusion2s_core::forms::FormDoc;
use fusion2s_core::{Bicharacter, Error, FiniteAbelianGroup, QuadraticForm, Result};
use serde::{Deserialize, Serialize};

/// `{"group": [...], "quadratic_form": {...}}` or `{"group": [...], "bicharacter": {...}}`.
/// With neither section the form is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    pub group: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadratic_form: Option<FormSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<BicharacterSection>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSection {
    #[serde(default)]
    pub diag: Vec<String>,
    #[serde(default)]
    pub offdiag: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicharacterSection {
    pub matrix: Vec<Vec<String>>,
}

/// A parsed and validated category.
#[derive(Clone, Debug)]
pub struct Category {
    pub form: QuadraticForm,
    pub bicharacter: Option<Bicharacter>,
}

impl CategorySpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed category document: {e}")))
    }

    pub fn build(&self, cap: usize) -> Result<Category> {
        let group = FiniteAbelianGroup::with_cap(self.group.clone(), cap)?;
        match (&self.quadratic_form, &self.bicharacter) {
            (Some(_), Some(_)) => Err(Error::Input(
                "give either quadratic_form or bicharacter, not both".into(),
            )),
            (Some(f), None) => Ok(Category {
                form: QuadraticForm::from_strings(group, &f.diag, &f.offdiag)?,
                bicharacter: None,
            }),
            (None, Some(b)) => {
                let beta = Bicharacter::from_strings(group, &b.matrix)?;
                Ok(Category {
                    form: beta.quadratic_form()?,
                    bicharacter: Some(beta),
                })
            }
            (None, None) => Ok(Category {
                form: QuadraticForm::trivial(group),
                bicharacter: None,
            }),
        }
    }
}

impl Category {
    /// The normalized document: coefficients reduced into `[0, 1)`.
    pub fn normalized(&self) -> CategorySpec {
        let group = self.form.group().orders().to_vec();
        match &self.bicharacter {
            Some(beta) => {
                let doc = fusion2s_core::forms::BicharacterDoc::from(beta.clone());
                CategorySpec {
                    group,
                    quadratic_form: None,
                    bicharacter: Some(BicharacterSection { matrix: doc.matrix }),
                }
            }
            None => {
                let doc = FormDoc::from(self.form.clone());
                CategorySpec {
                    group,
                    quadratic_form: Some(FormSection {
                        diag: doc.diag,
                        offdiag: doc.offdiag,
                    }),
                    bicharacter: None,
                }
            }
        }
    }

    /// The bicharacter for the center route: the given one, or a lift of the form.
    pub fn oracle_bicharacter(&self) -> Result<Bicharacter> {
        match &self.bicharacter {
            Some(b) => Ok(b.clone()),
            None => self.form.bicharacter_lift().ok_or_else(|| {
                Error::OracleUnavailable(format!(
                    "{} is not β(g,g) for any bicharacter β",
                    self.form
                ))
            }),
        }
    }
}
