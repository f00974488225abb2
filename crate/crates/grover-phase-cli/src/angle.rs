//! Radian parsing for command-line flags, with exact `pi` tokens.
//!
//! Accepted forms: a plain float (`0.5236`, `1e-3`), `pi`, signed and
//! scaled multiples (`2pi`, `2*pi`, `-pi/4`, `3pi/2`, `0.5pi`).

use std::f64::consts::PI;

pub fn parse_angle(input: &str) -> Result<f64, String> {
    let text = input.trim();
    if text.is_empty() {
        return Err("empty angle".into());
    }
    if let Ok(value) = text.parse::<f64>() {
        return if value.is_finite() {
            Ok(value)
        } else {
            Err(format!("angle `{input}` is not finite"))
        };
    }

    let (sign, rest) = match text.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, text.strip_prefix('+').unwrap_or(text)),
    };
    let Some(pi_at) = rest.find("pi") else {
        return Err(format!("cannot parse angle `{input}` (expected radians or a pi multiple)"));
    };
    let (coef_text, tail) = rest.split_at(pi_at);
    let tail = &tail[2..];

    let coef_text = coef_text.trim().trim_end_matches('*').trim();
    let coefficient = if coef_text.is_empty() {
        1.0
    } else {
        coef_text
            .parse::<f64>()
            .map_err(|_| format!("bad coefficient in angle `{input}`"))?
    };

    let divisor = if tail.is_empty() {
        1.0
    } else {
        let div_text = tail
            .strip_prefix('/')
            .ok_or_else(|| format!("unexpected trailing `{tail}` in angle `{input}`"))?
            .trim();
        let div: f64 = div_text
            .parse()
            .map_err(|_| format!("bad divisor in angle `{input}`"))?;
        if div == 0.0 {
            return Err(format!("zero divisor in angle `{input}`"));
        }
        div
    };

    let value = sign * coefficient * PI / divisor;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("angle `{input}` is not finite"))
    }
}
