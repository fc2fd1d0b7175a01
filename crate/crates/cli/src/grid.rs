//! Rectangular and polar evaluation grids.

use num_complex::Complex64;

/// Largest number of grid points accepted.
pub const MAX_POINTS: usize = 10_000_000;

/// One axis `MIN:MAX:N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Axis {
    pub fn parse(s: &str) -> Result<Axis, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, n] = parts.as_slice() else {
            return Err(format!("malformed axis '{s}' (expected MIN:MAX:N)"));
        };
        let min: f64 = min.parse().map_err(|_| format!("bad axis minimum in '{s}'"))?;
        let max: f64 = max.parse().map_err(|_| format!("bad axis maximum in '{s}'"))?;
        let n: usize = n.parse().map_err(|_| format!("bad point count in '{s}'"))?;
        let axis = Axis { min, max, n };
        axis.validate()?;
        Ok(axis)
    }

    pub fn point(min: f64) -> Axis {
        Axis { min, max: min, n: 1 }
    }

    fn validate(&self) -> Result<(), String> {
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err("axis bounds must be finite".into());
        }
        if self.n == 0 {
            return Err("axis needs at least one point".into());
        }
        if self.min > self.max || (self.min == self.max && self.n != 1) {
            return Err(format!(
                "axis needs MIN < MAX, or MIN = MAX with one point (got {}:{}:{})",
                self.min, self.max, self.n
            ));
        }
        Ok(())
    }

    pub fn value(&self, k: usize) -> f64 {
        if self.n == 1 {
            self.min
        } else if k + 1 == self.n {
            self.max
        } else {
            self.min + (self.max - self.min) * k as f64 / (self.n - 1) as f64
        }
    }
}

/// A grid in the complex plane; with `polar` the axes are modulus and argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub re: Axis,
    pub im: Axis,
    pub polar: bool,
}

impl GridSpec {
    pub fn new(re: Axis, im: Axis, polar: bool) -> Result<GridSpec, String> {
        let total = re.n.checked_mul(im.n).filter(|&t| t <= MAX_POINTS);
        if total.is_none() {
            return Err(format!("grid of {} x {} points exceeds the cap of {MAX_POINTS}", re.n, im.n));
        }
        Ok(GridSpec { re, im, polar })
    }

    pub fn len(&self) -> usize {
        self.re.n * self.im.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points in row-major order, first axis fastest.
    pub fn points(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.len());
        for j in 0..self.im.n {
            let b = self.im.value(j);
            for k in 0..self.re.n {
                let a = self.re.value(k);
                out.push(if self.polar {
                    Complex64::from_polar(a, b)
                } else {
                    Complex64::new(a, b)
                });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_values() {
        let a = Axis::parse("-2:2:5").unwrap();
        let v: Vec<f64> = (0..5).map(|k| a.value(k)).collect();
        assert_eq!(v, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        assert_eq!(Axis::parse("3:3:1").unwrap().value(0), 3.0);
    }

    #[test]
    fn bad_axes() {
        for s in ["1:0:3", "1:1:2", "0:1:0", "0:1", "a:1:2", "0:inf:3"] {
            assert!(Axis::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn cap_and_order() {
        let big = Axis { min: 0.0, max: 1.0, n: 10_001 };
        assert!(GridSpec::new(big, big, false).is_err());
        let g = GridSpec::new(Axis::parse("0:1:2").unwrap(), Axis::parse("5:6:2").unwrap(), false).unwrap();
        let p = g.points();
        assert_eq!(p[1], Complex64::new(1.0, 5.0));
        assert_eq!(p[2], Complex64::new(0.0, 6.0));
    }
}
