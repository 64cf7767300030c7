//! Real 2x2 matrices, just enough for transfer-matrix bookkeeping.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Mat2 {
    /// Row-major entries [[m00, m01], [m10, m11]].
    pub e: [[f64; 2]; 2],
}

impl Mat2 {
    pub fn new(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Mat2 {
            e: [[m00, m01], [m10, m11]],
        }
    }

    pub fn det(&self) -> f64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.e;
        let b = &rhs.e;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}
