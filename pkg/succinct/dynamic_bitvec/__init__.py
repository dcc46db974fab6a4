"""Blueprint replaying op scripts on dynamic bit vectors."""

from flask import Blueprint

bp = Blueprint("dynamic_bitvec", __name__, url_prefix="/dbv")

from . import routes  # noqa: E402
