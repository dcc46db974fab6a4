"""Forms for the louds blueprint."""

from flask_wtf import FlaskForm
from wtforms import BooleanField, IntegerField, SelectField, StringField, TextAreaField
from wtforms.validators import DataRequired, InputRequired, NumberRange, Optional, Regexp


class TreeBuildForm(FlaskForm):
    """Parenthesized tree to encode."""

    class Meta:
        csrf = False

    tree = TextAreaField("tree", validators=[DataRequired()])
    super_root = BooleanField("super_root")


class LoudsQueryForm(FlaskForm):
    """Navigation query on LOUDS bits."""

    class Meta:
        csrf = False

    bits = StringField(
        "bits",
        validators=[DataRequired(), Regexp(r"^[01\s]*$", message="bits must be made of 0 and 1")],
    )
    op = SelectField("op", choices=[("children", "children"), ("child", "child"), ("parent", "parent")])
    pos = IntegerField("pos", validators=[InputRequired(), NumberRange(min=0)])
    index = IntegerField("index", validators=[Optional(), NumberRange(min=0)])
