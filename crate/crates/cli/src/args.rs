use burkhardt::algebra::{field_make, FieldDesc};
use burkhardt::suite::prime_power;
use burkhardt::{Error, Result};

/// `p[,k[,modulus]]` with the modulus as colon-separated coefficients from
/// the constant term up, e.g. `2,2,1:1:1`. `0` is the rationals.
pub fn parse_field(text: &str) -> Result<FieldDesc> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = |what: &str| Error::InvalidField(format!("{what} in field descriptor {text:?}"));
    if parts.is_empty() || parts.len() > 3 {
        return Err(bad("expected p[,k[,modulus]]"));
    }
    let p: u64 = parts[0].parse().map_err(|_| bad("bad characteristic"))?;
    let k: u32 = match parts.get(1) {
        Some(s) => s.parse().map_err(|_| bad("bad degree"))?,
        None => 1,
    };
    let modulus = match parts.get(2) {
        Some(s) => Some(
            s.split(':')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad("bad modulus coefficient")))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    field_make(p, k, modulus)
}

/// A prime power `q`.
pub fn parse_q(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("0").unwrap(), FieldDesc::Rationals);
        assert_eq!(parse_field("7").unwrap().characteristic(), 7);
        let f = parse_field("2,2,1:1:1").unwrap();
        assert_eq!(f.as_finite().unwrap().order(), 4);
        assert!(parse_field("2,2,1:0:1").is_err());
        assert!(parse_field("x").is_err());
        assert!(parse_q(12).is_err());
        assert_eq!(parse_q(9).unwrap(), (3, 2));
    }
}
