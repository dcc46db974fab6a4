"""Blueprint exposing static rank/select queries."""

from flask import Blueprint

bp = Blueprint("bitvec_core", __name__, url_prefix="/bitvec")

from . import routes  # noqa: E402
