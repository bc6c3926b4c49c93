/// Formats `x` with six significant digits, without exponent, trailing zeros
/// or a trailing decimal point. Independent of locale.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return "0".to_owned();
    }
    // `{:e}` rounds to the requested significant digits deterministically.
    let sci = format!("{:.5e}", x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    if digits.bytes().all(|b| b == b'0') {
        return "0".to_owned();
    }
    // digits = d0 d1 ... d5 representing d0.d1...d5 * 10^exponent
    let point = exponent + 1;
    let mut out = String::new();
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', point as usize - digits.len()));
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        let trimmed = out.trim_end_matches('0').trim_end_matches('.');
        out = trimmed.to_owned();
    }
    if negative {
        out.insert(0, '-');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::fmt_num;

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333");
        assert_eq!(fmt_num(2.0 / 3.0), "0.666667");
        assert_eq!(fmt_num(123456789.0), "123457000");
        assert_eq!(fmt_num(-12.5), "-12.5");
        assert_eq!(fmt_num(0.000012345678), "0.0000123457");
        assert_eq!(fmt_num(100.0), "100");
        assert_eq!(fmt_num(99.99999999), "100");
        assert_eq!(fmt_num(1e-12 * 0.0), "0");
    }
}
