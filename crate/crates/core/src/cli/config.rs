//! `key = value` run files.

use std::path::PathBuf;

use super::args::CommonArgs;
use crate::error::{Error, Result};

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Parse(format!("bad value for '{key}': '{value}'")))
}

/// Parses a config file body into flag values. Blank lines and `#`
/// comments are skipped.
pub fn parse_config(text: &str) -> Result<CommonArgs> {
    let mut c = CommonArgs::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
        let (key, value) = (key.trim().replace('-', "_"), value.trim().trim_matches('"').to_string());
        match key.as_str() {
            "g" => c.g = Some(value),
            "scheme" => c.scheme = Some(value),
            "level" => c.level = Some(parse(&key, &value)?),
            "seed" => c.seed = Some(parse(&key, &value)?),
            "out" => c.out = Some(PathBuf::from(value)),
            "tol" => c.tol = Some(parse(&key, &value)?),
            "edge_rule_order" => c.edge_rule_order = Some(parse(&key, &value)?),
            "triangle_mode" => c.triangle_mode = Some(value),
            "samples" => c.samples = Some(parse(&key, &value)?),
            "r_inner" => c.r_inner = Some(parse(&key, &value)?),
            "r_outer" => c.r_outer = Some(parse(&key, &value)?),
            other => return Err(Error::Parse(format!("line {}: unknown key '{other}'", lineno + 1))),
        }
    }
    Ok(c)
}

/// Flags given on the command line win over the file.
pub fn overlay(flags: CommonArgs, file: CommonArgs) -> CommonArgs {
    CommonArgs {
        g: flags.g.or(file.g),
        scheme: flags.scheme.or(file.scheme),
        level: flags.level.or(file.level),
        seed: flags.seed.or(file.seed),
        out: flags.out.or(file.out),
        tol: flags.tol.or(file.tol),
        config: flags.config,
        edge_rule_order: flags.edge_rule_order.or(file.edge_rule_order),
        triangle_mode: flags.triangle_mode.or(file.triangle_mode),
        samples: flags.samples.or(file.samples),
        r_inner: flags.r_inner.or(file.r_inner),
        r_outer: flags.r_outer.or(file.r_outer),
    }
}
