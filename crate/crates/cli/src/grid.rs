use std::path::Path;

use orbline_core::{parse_rat, GaussRat, Rat, StabilityParam};

use crate::Failure;

/// Reads a τ grid from a file, a `rect:` range, or an inline `;` list.
pub fn parse_grid(arg: &str) -> Result<Vec<StabilityParam>, Failure> {
    let points = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg)?;
        text.lines()
            .map(|line| line.split('#').next().unwrap_or("").trim())
            .filter(|line| !line.is_empty())
            .map(point)
            .collect::<Result<Vec<_>, _>>()?
    } else if let Some(rect) = arg.strip_prefix("rect:") {
        parse_rect(rect)?
    } else {
        arg.split(';')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(point)
            .collect::<Result<Vec<_>, _>>()?
    };
    if points.is_empty() {
        return Err(Failure::Usage(format!("grid {arg:?} has no points")));
    }
    Ok(points)
}

fn point(s: &str) -> Result<StabilityParam, Failure> {
    GaussRat::parse_pair(s)
        .and_then(StabilityParam::new)
        .map_err(|e| Failure::Usage(e.to_string()))
}

/// `RE0,RE1,NRE;IM0,IM1,NIM`: evenly spaced, endpoints included, real part
/// varying fastest.
fn parse_rect(s: &str) -> Result<Vec<StabilityParam>, Failure> {
    let bad = || Failure::Usage(format!("expected rect:RE0,RE1,NRE;IM0,IM1,NIM, got {s:?}"));
    let (re, im) = s.split_once(';').ok_or_else(bad)?;
    let axis = |part: &str| -> Result<Vec<Rat>, Failure> {
        let fields: Vec<&str> = part.split(',').map(str::trim).collect();
        let [lo, hi, n] = fields[..] else {
            return Err(bad());
        };
        let lo = parse_rat(lo).map_err(|e| Failure::Usage(e.to_string()))?;
        let hi = parse_rat(hi).map_err(|e| Failure::Usage(e.to_string()))?;
        let n: i64 = n.parse().map_err(|_| bad())?;
        if n < 1 {
            return Err(bad());
        }
        if n == 1 {
            return Ok(vec![lo]);
        }
        let step = (&hi - &lo) / Rat::from_integer((n - 1).into());
        Ok((0..n)
            .map(|k| &lo + &step * Rat::from_integer(k.into()))
            .collect())
    };
    let (res, ims) = (axis(re)?, axis(im)?);
    let mut out = Vec::with_capacity(res.len() * ims.len());
    for y in &ims {
        for x in &res {
            let tau = GaussRat::new(x.clone(), y.clone());
            out.push(StabilityParam::new(tau).map_err(|e| Failure::Usage(e.to_string()))?);
        }
    }
    Ok(out)
}
