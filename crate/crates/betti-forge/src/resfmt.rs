//! Pretty-printing of graded free resolutions in the display convention
//! "0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S", and the inverse
//! parser used by the verifier (which also accepts the S[-6] variant).

/// Render the shift lists of a resolution (internal order: F_0 = S first).
pub fn format_resolution(shifts: &[Vec<i64>]) -> String {
    let mut parts: Vec<String> = vec!["0".into()];
    for module in shifts.iter().skip(1).rev() {
        parts.push(format_module(module));
    }
    parts.push(format_module(&shifts[0]));
    parts.join(" -> ")
}

fn format_module(shifts: &[i64]) -> String {
    if shifts.is_empty() {
        return "0".into();
    }
    let mut sorted = shifts.to_vec();
    sorted.sort_unstable();
    let mut groups: Vec<(i64, usize)> = Vec::new();
    for a in sorted {
        match groups.last_mut() {
            Some((v, n)) if *v == a => *n += 1,
            _ => groups.push((a, 1)),
        }
    }
    groups
        .iter()
        .map(|(a, n)| {
            let base = if *a == 0 {
                "S".to_string()
            } else {
                format!("S(-{a})")
            };
            if *n == 1 {
                base
            } else {
                format!("{base}^{n}")
            }
        })
        .collect::<Vec<_>>()
        .join(" (+) ")
}

/// Parse a resolution display back into shift lists (internal order),
/// accepting both "S(-6)" and "S[-6]" and either "(+)" or "⊕" separators.
pub fn parse_resolution_text(text: &str) -> Result<Vec<Vec<i64>>, String> {
    let mut modules: Vec<Vec<i64>> = Vec::new();
    for raw in text.split("->") {
        let part = raw.trim();
        if part == "0" {
            continue;
        }
        if part.is_empty() {
            return Err("empty module between arrows".into());
        }
        let mut shifts: Vec<i64> = Vec::new();
        for piece in part.replace('⊕', "(+)").split("(+)") {
            let s = piece.trim();
            if s.is_empty() {
                return Err(format!("empty summand in '{part}'"));
            }
            shifts.extend(parse_summand(s)?);
        }
        shifts.sort_unstable();
        modules.push(shifts);
    }
    if modules.is_empty() {
        return Err("no modules found".into());
    }
    modules.reverse(); // displayed last module is F_0
    Ok(modules)
}

fn parse_summand(s: &str) -> Result<Vec<i64>, String> {
    let bytes = s.as_bytes();
    if bytes.first() != Some(&b'S') {
        return Err(format!("expected 'S...', got '{s}'"));
    }
    let mut rest = &s[1..];
    let mut shift: i64 = 0;
    let mut mult: usize = 1;
    // optional exponent before the twist: S^4(-2)
    if let Some(r) = rest.strip_prefix('^') {
        let (m, r2) = take_int(r)?;
        if m <= 0 {
            return Err(format!("bad multiplicity in '{s}'"));
        }
        mult = m as usize;
        rest = r2;
    }
    if let Some(open) = rest.chars().next() {
        if open == '(' || open == '[' {
            let close = if open == '(' { ')' } else { ']' };
            let end = rest
                .find(close)
                .ok_or_else(|| format!("unclosed twist in '{s}'"))?;
            let inner = rest[1..end].trim();
            let v: i64 = inner
                .parse()
                .map_err(|_| format!("bad twist '{inner}' in '{s}'"))?;
            shift = -v;
            rest = &rest[end + 1..];
        }
    }
    if let Some(r) = rest.strip_prefix('^') {
        let (m, r2) = take_int(r)?;
        if m <= 0 || !r2.trim().is_empty() {
            return Err(format!("bad multiplicity in '{s}'"));
        }
        mult = m as usize;
        rest = r2;
    }
    if !rest.trim().is_empty() {
        return Err(format!("trailing text in summand '{s}'"));
    }
    Ok(vec![shift; mult])
}

fn take_int(s: &str) -> Result<(i64, &str), String> {
    let end = s
        .char_indices()
        .take_while(|(_, c)| c.is_ascii_digit() || *c == '-')
        .map(|(i, c)| i + c.len_utf8())
        .last()
        .ok_or_else(|| format!("expected integer in '{s}'"))?;
    let v: i64 = s[..end].parse().map_err(|_| format!("bad integer in '{s}'"))?;
    Ok((v, &s[end..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_display() {
        let shifts = vec![vec![0], vec![2; 4], vec![4; 9], vec![5; 8], vec![6, 6]];
        assert_eq!(
            format_resolution(&shifts),
            "0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S"
        );
        let parsed = parse_resolution_text(&format_resolution(&shifts)).unwrap();
        assert_eq!(parsed, shifts);
    }

    #[test]
    fn kummer_display() {
        let shifts = vec![vec![0], vec![3; 4], vec![6; 12], vec![7; 12], vec![8; 3]];
        assert_eq!(
            format_resolution(&shifts),
            "0 -> S(-8)^3 -> S(-7)^12 -> S(-6)^12 -> S(-3)^4 -> S"
        );
    }

    #[test]
    fn smooth_cubic_display() {
        let shifts = vec![vec![0], vec![2; 4], vec![4; 6], vec![6; 4], vec![8]];
        assert_eq!(
            format_resolution(&shifts),
            "0 -> S(-8) -> S(-6)^4 -> S(-4)^6 -> S(-2)^4 -> S"
        );
    }

    #[test]
    fn mixed_twists_display() {
        let shifts = vec![vec![0], vec![2; 4], vec![3, 3, 4, 4, 4], vec![5, 5]];
        assert_eq!(
            format_resolution(&shifts),
            "0 -> S(-5)^2 -> S(-3)^2 (+) S(-4)^3 -> S(-2)^4 -> S"
        );
    }

    #[test]
    fn bracket_variant_accepted() {
        let a = parse_resolution_text("0 -> S[-6]^2 -> S[-5]^8 -> S[-4]^9 -> S[-2]^4 -> S")
            .unwrap();
        let b = parse_resolution_text("0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S")
            .unwrap();
        assert_eq!(a, b);
        // paper-style exponent-first form
        let c = parse_resolution_text("0 -> S(-8) -> S^4(-6) -> S^6(-4) -> S^4(-2) -> S").unwrap();
        assert_eq!(c[1], vec![2, 2, 2, 2]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_resolution_text("").is_err());
        assert!(parse_resolution_text("0 -> T(-2) -> S").is_err());
        assert!(parse_resolution_text("0 -> S(-2 -> S").is_err());
    }
}
