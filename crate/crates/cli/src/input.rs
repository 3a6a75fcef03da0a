//! Reading gradings, Hilbert functions, ideals and small scalar arguments.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use hilb2_core::{Grading, HilbertFunction, MonomialIdeal};
use num_rational::BigRational;
use serde::de::DeserializeOwned;

/// Inputs shared by every command. Each value is a file path or inline JSON.
#[derive(Args, Clone, Debug, Default)]
pub struct Inputs {
    /// Grading as JSON (file or inline); defaults to the trivial grading A = 0.
    #[arg(long)]
    pub grading: Option<String>,
    /// Hilbert function as a JSON list of {"degree", "value"} entries.
    #[arg(long)]
    pub hilbert: Option<String>,
    /// Monomial ideal as JSON, e.g. '{"gens":[[4,0],[2,1],[0,2]]}'.
    #[arg(long)]
    pub ideal: Option<String>,
}

/// Parse `arg` as inline JSON if it looks like JSON, otherwise read it as a path.
pub fn load_json<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    let trimmed = arg.trim_start();
    let (text, source) = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        (arg.to_string(), "inline".to_string())
    } else {
        let text = fs::read_to_string(Path::new(arg)).with_context(|| format!("cannot read {what} file {arg}"))?;
        (text, arg.to_string())
    };
    serde_json::from_str(&text).map_err(|e| anyhow!("{what} ({source}): {e}"))
}

impl Inputs {
    pub fn grading(&self) -> Result<Grading> {
        match &self.grading {
            None => Ok(Grading::trivial()),
            Some(s) => load_json(s, "grading"),
        }
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let s = self.ideal.as_deref().ok_or_else(|| anyhow!("this command needs --ideal"))?;
        let m: MonomialIdeal = load_json(s, "ideal")?;
        Ok(m)
    }

    pub fn finite_ideal(&self) -> Result<MonomialIdeal> {
        let m = self.ideal()?;
        if !m.is_finite_colength() {
            bail!("ideal {m} does not have finite colength");
        }
        Ok(m)
    }

    /// The Hilbert function from `--hilbert`, or computed from `--ideal`.
    pub fn hilbert(&self, g: &Grading) -> Result<HilbertFunction> {
        let h = match (&self.hilbert, &self.ideal) {
            (Some(s), _) => load_json::<HilbertFunction>(s, "hilbert function")?,
            (None, Some(_)) => self.finite_ideal()?.hilbert_function(g)?,
            (None, None) => bail!("this command needs --hilbert or --ideal"),
        };
        h.validate(g).context("hilbert function does not fit the grading")?;
        if h.total() == 0 {
            bail!("the Hilbert function is identically zero");
        }
        Ok(h)
    }
}

/// `"i,u,v"`.
pub fn parse_alpha(s: &str) -> Result<(usize, u32, u32)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("arrow must be written i,u,v, got {s:?}");
    }
    let i = parts[0].parse().with_context(|| format!("bad arrow index in {s:?}"))?;
    let u = parts[1].parse().with_context(|| format!("bad exponent in {s:?}"))?;
    let v = parts[2].parse().with_context(|| format!("bad exponent in {s:?}"))?;
    Ok((i, u, v))
}

/// A rational written `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let r = BigRational::from_str(s.trim()).map_err(|_| anyhow!("not a rational number: {s:?}"))?;
    Ok(r)
}

pub fn parse_rationals(list: &[String]) -> Result<Vec<BigRational>> {
    list.iter().map(|s| parse_rational(s)).collect()
}
