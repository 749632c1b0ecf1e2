"""scikit-learn style front ends.

Both estimators take a d x d gluing matrix whose *columns* generate the
lattice.  :class:`SuccessiveMinimumBasis` learns a reduced basis and
``transform`` expresses column vectors in it; :class:`BundleSplitter`
learns the splitting type together with its certificate.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_gluing_matrix, check_vectors, check_weights
from .matrix import column
from .smb import Lattice, smb, span_coefficients
from .splitter import split, split_rational, verify_splitting


class SuccessiveMinimumBasis(TransformerMixin, BaseEstimator):
    """Successive minimum basis of a k[T]-lattice.

    Parameters
    ----------
    weights : sequence of int, optional
        Valuations of the norms of the standard basis vectors.
    tie_break : int, optional
        Seed for randomized pivot tie-breaking during reduction.

    Attributes
    ----------
    omegas_ : list of lists
        Reduced basis, one vector per column, sorted by increasing norm.
    gauges_ : list of int
        Gauges of the basis vectors (the successive minima).
    U_ : list of lists
        Unimodular polynomial matrix with ``X @ U_ == omegas_``.
    """

    def __init__(self, weights=None, tie_break=None):
        self.weights = weights
        self.tie_break = tie_break

    def fit(self, X, y=None):
        rows, field, rational = check_gluing_matrix(X)
        if rational:
            raise TypeError("SuccessiveMinimumBasis needs Laurent entries; clear denominators first")
        weights = check_weights(self.weights, len(rows))
        result = smb(Lattice(rows, weights, field), tie_break=self.tie_break)
        self.result_ = result
        self.omegas_ = result.omegas
        self.gauges_ = list(result.gauges)
        self.U_ = result.U
        self.pivot_rows_ = list(result.pivot_rows)
        self.field_ = field
        self.n_features_in_ = len(rows)
        return self

    def transform(self, X):
        """Coordinates (rational functions) of the columns of ``X`` in the fitted basis."""
        check_is_fitted(self, "result_")
        rows = check_vectors(X, self.n_features_in_)
        cols = [span_coefficients(column(rows, j), self.result_) for j in range(len(rows[0]))]
        return [list(r) for r in zip(*cols)]

    def shortest_vector(self):
        check_is_fitted(self, "result_")
        return self.result_.omega(0), self.gauges_[0]


class BundleSplitter(BaseEstimator):
    """Splitting type ``n_1 >= ... >= n_d`` of the bundle glued by ``X``.

    ``fit`` stores the certificate ``X == W_ @ D_ @ U_`` and its verification
    report; ``fit_predict`` returns the splitting type directly.
    """

    def __init__(self, weights=None, tie_break=None, verify=True):
        self.weights = weights
        self.tie_break = tie_break
        self.verify = verify

    def fit(self, X, y=None):
        rows, field, rational = check_gluing_matrix(X)
        weights = check_weights(self.weights, len(rows))
        runner = split_rational if rational else split
        s = runner(rows, field, weights, tie_break=self.tie_break, verify=self.verify)
        self.splitting_ = s
        self.splitting_type_ = list(s.n)
        self.W_, self.D_, self.U_ = s.W, s.D, s.U
        self.report_ = verify_splitting(rows, s) if self.verify else None
        self.n_features_in_ = len(rows)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).splitting_type_

    def predict(self, X):
        """Splitting type of another gluing matrix, using this estimator's parameters."""
        check_is_fitted(self, "splitting_")
        return BundleSplitter(**self.get_params()).fit_predict(X)
