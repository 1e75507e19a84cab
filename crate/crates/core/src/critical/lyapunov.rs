use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::CriticalError;
use crate::algebra::{rat, Rational};
use crate::pzfield::PZParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivativeCondition {
    pub condition: String,
    pub holds: bool,
}

/// Positivity and derivative conditions for
/// `V = c1 x^(2m) + c2 x^m y + c3 y^2` in the case `k = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyapunovCertificate {
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub positive: bool,
    pub derivative_conditions: Vec<DerivativeCondition>,
    pub holds: bool,
    pub notes: Vec<String>,
}

impl Serialize for LyapunovCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LyapunovCertificate", 7)?;
        st.serialize_field("c1", &self.c1.to_string())?;
        st.serialize_field("c2", &self.c2.to_string())?;
        st.serialize_field("c3", &self.c3.to_string())?;
        st.serialize_field("positive", &self.positive)?;
        st.serialize_field("derivative_conditions", &self.derivative_conditions)?;
        st.serialize_field("holds", &self.holds)?;
        st.serialize_field("notes", &self.notes)?;
        st.end()
    }
}

pub fn lyapunov_certificate(params: &PZParams, c1: &Rational, c2: &Rational, c3: &Rational) -> Result<LyapunovCertificate, CriticalError> {
    let PZParams { a, b, c, m, k } = params;
    if !k.is_zero() || *m < Rational::one() {
        return Err(CriticalError::WrongCase);
    }
    let positive = c1.is_positive() && !(rat(4, 1) * c1 * c3 - c2 * c2).is_negative();
    let e1 = a * a * m + c + b * b * m;
    let e2 = rat(2, 1) * m * c1 * (a + b) + m * c2;
    let e3 = c2 + rat(4, 1) * c3 * (a + b);
    let derivative_conditions = vec![
        DerivativeCondition { condition: format!("a^2 m + c + b^2 m = 0 (value {e1})"), holds: e1.is_zero() },
        DerivativeCondition { condition: format!("2 m c1 (a + b) + m c2 = 0 (value {e2})"), holds: e2.is_zero() },
        DerivativeCondition { condition: format!("c2 + 4 c3 (a + b) < 0 (value {e3})"), holds: e3.is_negative() },
    ];
    let holds = positive && derivative_conditions.iter().all(|d| d.holds);
    Ok(LyapunovCertificate {
        c1: c1.clone(),
        c2: c2.clone(),
        c3: c3.clone(),
        positive,
        derivative_conditions,
        holds,
        notes: vec!["the conditions for odd and even m coincide".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        rat(n, 1)
    }

    fn truth(cert: &LyapunovCertificate) -> Vec<bool> {
        cert.derivative_conditions.iter().map(|d| d.holds).collect()
    }

    #[test]
    fn per_condition_report() {
        let p = PZParams::from_ints(1, -1, -2, 1, 0);
        let cert = lyapunov_certificate(&p, &r(1), &r(-1), &r(1)).unwrap();
        assert!(cert.positive);
        assert_eq!(truth(&cert), [true, false, true]);
        assert!(!cert.holds);
        // a + b = 0 and c2 = 0: the strict inequality fails on the boundary
        let cert = lyapunov_certificate(&p, &r(1), &r(0), &r(1)).unwrap();
        assert_eq!(truth(&cert), [true, true, false]);
        assert!(!cert.holds);
    }

    #[test]
    fn satisfying_instance() {
        // a = b = -1, m = 1, c = -2; c2 = 4 c1 and c3 = c1 (a + b)^2
        let p = PZParams::from_ints(-1, -1, -2, 1, 0);
        let cert = lyapunov_certificate(&p, &r(1), &r(4), &r(4)).unwrap();
        assert!(cert.positive);
        assert_eq!(truth(&cert), [true, true, true]);
        assert!(cert.holds);
    }

    #[test]
    fn positivity_and_cases() {
        let p = PZParams::from_ints(1, -1, -2, 1, 0);
        for (c1, c2, c3) in [(-1, 0, 5), (0, 0, 1), (1, 3, 2)] {
            assert!(!lyapunov_certificate(&p, &r(c1), &r(c2), &r(c3)).unwrap().positive);
        }
        assert!(lyapunov_certificate(&p, &r(1), &r(2), &r(1)).unwrap().positive);
        let bad_k = PZParams::from_ints(1, -1, -2, 1, 1);
        assert_eq!(lyapunov_certificate(&bad_k, &r(1), &r(0), &r(1)), Err(CriticalError::WrongCase));
        let bad_m = PZParams::new(r(1), r(-1), r(-2), rat(1, 2), r(0));
        assert_eq!(lyapunov_certificate(&bad_m, &r(1), &r(0), &r(1)), Err(CriticalError::WrongCase));
    }
}
