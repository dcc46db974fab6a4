"""Blueprint exposing LOUDS encoding and navigation."""

from flask import Blueprint

bp = Blueprint("louds", __name__, url_prefix="/louds")

from . import routes  # noqa: E402
