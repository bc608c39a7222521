use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::Cyclotomic;
use crate::scalar::Scalar;

/// A function on conjugacy classes with values in a cyclotomic field.
///
/// Values are stored in class order of the table the function was built
/// against; all values share one field order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassFunction<Q> {
    values: Vec<Cyclotomic<Q>>,
}

impl<Q: Scalar> ClassFunction<Q> {
    /// # Panics
    ///
    /// Panics if `values` is empty or mixes field orders.
    pub fn new(values: Vec<Cyclotomic<Q>>) -> Self {
        assert!(!values.is_empty(), "class function without classes");
        let order = values[0].order();
        assert!(
            values.iter().all(|v| v.order() == order),
            "class function values live in different fields"
        );
        ClassFunction { values }
    }

    pub fn constant(classes: usize, order: usize, value: i64) -> Self {
        Self::new(vec![Cyclotomic::from_integer(order, value); classes])
    }

    pub fn zero(classes: usize, order: usize) -> Self {
        Self::constant(classes, order, 0)
    }

    pub fn values(&self) -> &[Cyclotomic<Q>] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic<Q> {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Order of the cyclotomic field holding the values.
    pub fn field_order(&self) -> usize {
        self.values[0].order()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    pub fn scale(&self, factor: &Q) -> Self {
        ClassFunction {
            values: self.values.iter().map(|v| v.scale(factor)).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&Cyclotomic<Q>, &Cyclotomic<Q>) -> Cyclotomic<Q>,
    ) -> Self {
        assert_eq!(
            self.values.len(),
            other.values.len(),
            "class functions over different tables"
        );
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }
}

impl<'a, Q: Scalar> Add<&'a ClassFunction<Q>> for &'a ClassFunction<Q> {
    type Output = ClassFunction<Q>;
    fn add(self, rhs: &'a ClassFunction<Q>) -> ClassFunction<Q> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a, Q: Scalar> Sub<&'a ClassFunction<Q>> for &'a ClassFunction<Q> {
    type Output = ClassFunction<Q>;
    fn sub(self, rhs: &'a ClassFunction<Q>) -> ClassFunction<Q> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Pointwise product, the character of the tensor product.
impl<'a, Q: Scalar> Mul<&'a ClassFunction<Q>> for &'a ClassFunction<Q> {
    type Output = ClassFunction<Q>;
    fn mul(self, rhs: &'a ClassFunction<Q>) -> ClassFunction<Q> {
        self.zip_with(rhs, |a, b| a * b)
    }
}

impl<Q: Scalar> Neg for &ClassFunction<Q> {
    type Output = ClassFunction<Q>;
    fn neg(self) -> ClassFunction<Q> {
        ClassFunction {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}
