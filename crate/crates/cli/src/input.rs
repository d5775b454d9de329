use std::path::Path;

use anyhow::Context;
use liaison_core::eqcoh::ClassData;
use liaison_core::{CurveInvariants, Degree, FinSeq};
use serde::{Deserialize, Serialize};

/// One class description. A bare curve object (`{"delta2": …, "h1": …}`) is
/// accepted and read as the minimal curve of its class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Input {
    pub minimal: CurveInvariants,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub buchsbaum_dims: Option<FinSeq>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<Degree>,
    /// Dimensions of the kernel of multiplication by a general linear form
    /// on the module, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<FinSeq>,
}

impl Input {
    pub fn class(&self) -> ClassData {
        ClassData {
            minimal: self.minimal.clone(),
            buchsbaum_dims: self.buchsbaum_dims.clone(),
            t1: self.t1,
        }
    }
}

impl From<ClassData> for Input {
    fn from(cd: ClassData) -> Self {
        Input {
            minimal: cd.minimal,
            buchsbaum_dims: cd.buchsbaum_dims,
            t1: cd.t1,
            kernel: None,
        }
    }
}

pub fn parse(text: &str) -> anyhow::Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("minimal").is_some() {
        Ok(serde_json::from_str(text)?)
    } else if value.get("delta2").is_some() {
        let c: CurveInvariants = serde_json::from_str(text)?;
        Ok(ClassData::new(c).into())
    } else {
        anyhow::bail!("expected a class object with \"minimal\" or a curve object with \"delta2\"")
    }
}

pub fn read(path: Option<&Path>) -> anyhow::Result<Input> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => std::io::read_to_string(std::io::stdin()).context("reading stdin")?,
    };
    parse(&text)
}
