use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use magma_lab::{magma, Magma};

pub const FAMILIES: &str =
    "constant, left-zero, right-zero, leftoid, rightoid, cyclic, multiplicative, midpoint, affine, saturating-add, symmetric";

/// Reads a magma from `-` (stdin), a file, or an inline `family:params`
/// spec such as `midpoint:5` or `leftoid:3,1,2,0`.
pub fn load(arg: &str) -> Result<Magma> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else if let Some((family, params)) = arg.split_once(':') {
        return build(family, &parse_params(params.split(','))?);
    } else {
        bail!("no such file: {arg}");
    };
    Ok(text.parse::<Magma>().with_context(|| format!("parsing {arg}"))?)
}

pub fn parse_params<'a>(raw: impl IntoIterator<Item = &'a str>) -> Result<Vec<usize>> {
    raw.into_iter()
        .flat_map(|s| s.split(','))
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad parameter {s:?}")))
        .collect()
}

pub fn build(family: &str, params: &[usize]) -> Result<Magma> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("{family} takes {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let m = match family {
        "constant" => {
            want(2)?;
            magma::constant(params[0], params[1])?
        }
        "left-zero" => {
            want(1)?;
            magma::left_zero(params[0])?
        }
        "right-zero" => {
            want(1)?;
            magma::right_zero(params[0])?
        }
        "leftoid" | "rightoid" => {
            let Some((&n, map)) = params.split_first() else { bail!("{family} takes an order and a map") };
            if map.len() != n {
                bail!("{family} over order {n} needs {n} map values, got {}", map.len());
            }
            if family == "leftoid" {
                magma::leftoid(n, map)?
            } else {
                magma::rightoid(n, map)?
            }
        }
        "cyclic" => {
            want(1)?;
            magma::cyclic_group(params[0])?
        }
        "multiplicative" => {
            want(1)?;
            magma::multiplicative(params[0])?
        }
        "midpoint" => {
            want(1)?;
            magma::midpoint(params[0])?
        }
        "affine" => {
            want(4)?;
            magma::affine(params[0], params[1], params[2], params[3])?
        }
        "saturating-add" => {
            want(1)?;
            magma::saturating_add(params[0])?
        }
        "symmetric" => {
            want(1)?;
            magma::symmetric_group(params[0])?
        }
        other => bail!("unknown family {other:?} (expected one of: {FAMILIES})"),
    };
    Ok(m)
}
