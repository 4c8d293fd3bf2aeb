# cli.py
"""Command line front end; every subcommand reads and writes JSON documents.

Exit codes: 0 on success, 1 on domain errors, 2 on input, output and usage errors.
"""
import json
import logging
import random
import sys

import click

from cellres import formats
from cellres.complex_core import face_poset, relabel, validate
from cellres.config import get_settings, setup_logging
from cellres.constructors import rpn_complex, scarf_complex, sphere_complex, taylor_complex, torus_complex
from cellres.exceptions import CellResError, ParseError
from cellres.homology import chain_complex, coefficient_homology, graded_homology, parse_coefficients, shift, INTEGERS
from cellres.monomials import CoefficientField, MonomialIdeal, RingDescriptor
from cellres.polyhedral import cell_complex_from_polyhedron, hull_complex, polyhedral_complex
from cellres.random_gen import default_ring, random_generic_ideal, random_ideal
from cellres.resolution_checks import betti_table, check
from cellres.worked_examples import EXAMPLES

logger = logging.getLogger(__name__)


class CellResGroup(click.Group):
    """Group that turns domain errors into exit codes"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (ParseError, OSError) as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(2)
        except CellResError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)


def input_option(f):
    return click.option(
        "-i", "--input", "source", type=click.File("r"), default="-",
        help="Input JSON file (default: standard input).",
    )(f)


def output_option(f):
    return click.option(
        "-o", "--out", "out", type=click.Path(dir_okay=False, writable=True), default=None,
        help="Output file (default: standard output).",
    )(f)


def ring_options(f):
    f = click.option("--field", default=None, help="Coefficient field: Q or Fp:<p>.")(f)
    return click.option("--variables", default="x", show_default=True, help="Comma-separated variable names.")(f)


def _ring(variables, field):
    field = CoefficientField.parse(field or get_settings().default_field)
    return RingDescriptor(tuple(v.strip() for v in variables.split(",") if v.strip()), field)


def _read(source, what):
    return formats.loads(source.read(), what)


def _emit(text, out):
    if out is None:
        click.echo(text)
        return
    with open(out, "w") as f:
        f.write(text + "\n")
    logger.info(f"Wrote {out}")


def _emit_json(data, out):
    _emit(formats.dumps(data), out)


@click.group(cls=CellResGroup)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
def cli(verbose):
    """Cellular resolutions of monomial ideals."""
    level = {0: None, 1: logging.INFO}.get(verbose, logging.DEBUG)
    setup_logging(level)
    if level is not None:
        logging.getLogger().setLevel(level)


@cli.command()
@input_option
@output_option
def taylor(source, out):
    """Taylor complex of an ideal."""
    ideal = formats.ideal_from_dict(_read(source, "ideal"))
    _emit_json(formats.complex_to_dict(taylor_complex(ideal)), out)


@cli.command()
@input_option
@output_option
def scarf(source, out):
    """Scarf complex of an ideal."""
    ideal = formats.ideal_from_dict(_read(source, "ideal"))
    _emit_json(formats.complex_to_dict(scarf_complex(ideal)), out)


@cli.command()
@input_option
@output_option
@click.option("--t", "t", type=int, default=None, help="Hull parameter (default (n+1)!+1).")
def hull(source, out, t):
    """Hull complex of an ideal."""
    ideal = formats.ideal_from_dict(_read(source, "ideal"))
    _emit_json(formats.complex_to_dict(hull_complex(ideal, t)), out)


SPACES = {"sphere": sphere_complex, "rpn": rpn_complex, "torus": torus_complex}


@cli.command()
@click.argument("kind", type=click.Choice(sorted(SPACES)))
@click.option("--dim", "dim", type=int, required=True, help="Dimension n.")
@ring_options
@output_option
def space(kind, dim, variables, field, out):
    """Sphere, real projective space or torus, all labels 1."""
    complex_ = SPACES[kind](_ring(variables, field), dim)
    _emit_json(formats.complex_to_dict(complex_), out)


@cli.command()
@input_option
@output_option
@click.option("--labels", "labels_file", type=click.File("r"), default=None,
              help='JSON map from "c1,c2,..." coordinates to monomials.')
@ring_options
def frompoly(source, out, labels_file, variables, field):
    """Cell complex of a polyhedron or of a polyhedral complex."""
    ring, polyhedra, many = formats.polyhedra_from_dict(_read(source, "polyhedra"))
    ring = ring or _ring(variables, field)
    labels = None
    if labels_file is not None:
        labels = formats.point_labels_from_dict(_read(labels_file, "labels file"), ring)
    geometry = polyhedral_complex(polyhedra) if many else polyhedra[0]
    _emit_json(formats.complex_to_dict(cell_complex_from_polyhedron(ring, geometry, labels)), out)


@cli.command("relabel")
@input_option
@output_option
@click.option("--labels", "labels_file", type=click.File("r"), required=True,
              help="JSON map from vertex ids to monomials.")
def relabel_command(source, out, labels_file):
    """Replace vertex labels and recompute the other labels as lcms."""
    complex_ = formats.complex_from_dict(_read(source, "complex"))
    labels = formats.vertex_labels_from_dict(_read(labels_file, "labels file"), complex_.ring)
    _emit_json(formats.complex_to_dict(relabel(complex_, labels)), out)


@cli.command("check")
@input_option
@output_option
def check_command(source, out):
    """Decide whether a complex supports a (minimal) resolution."""
    complex_ = formats.complex_from_dict(_read(source, "complex"))
    _emit_json(check(complex_).to_dict(), out)


@cli.command()
@input_option
@output_option
@click.option("--shift/--no-shift", "shifted", default=True, help="Index as a resolution of S/I.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def betti(source, out, shifted, fmt):
    """Betti table of the minimal resolution a complex supports."""
    complex_ = formats.complex_from_dict(_read(source, "complex"))
    table = betti_table(complex_, shifted=shifted)
    if fmt == "json":
        _emit_json(table.to_dict(), out)
    else:
        _emit(table.render_text() + "\n\n" + table.render_diagram(), out)


@cli.command()
@input_option
@output_option
@click.option("--coeff", default=None, help="Q, Fp:<p> or Z (default: the ring's field).")
@click.option("--graded", is_flag=True, help="Multigraded homology of the labeled complex.")
@click.option("--reduced/--no-reduced", default=True, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
def homology(source, out, coeff, graded, reduced, fmt):
    """Homology over a field or the integers."""
    complex_ = formats.complex_from_dict(_read(source, "complex"))
    if graded:
        if not reduced:
            raise click.BadParameter("graded homology is always reduced", param_hint="--no-reduced")
        coefficients = parse_coefficients(coeff, complex_.ring)
        if coefficients == INTEGERS:
            raise click.BadParameter("graded homology needs a field", param_hint="--coeff")
        summary = graded_homology(complex_, coefficients=coefficients)
    else:
        summary = coefficient_homology(complex_, coeff, reduced=reduced)
    if fmt == "text":
        _emit(summary.render_text(), out)
    else:
        _emit_json(summary.to_dict(), out)


@cli.command()
@input_option
@output_option
@click.option("--shift", "s", type=int, default=0, show_default=True, help="Move degree i to i - S.")
@click.option("--reduced/--no-reduced", default=True, show_default=True)
def chain(source, out, s, reduced):
    """Chain complex with its differential matrices."""
    complex_ = formats.complex_from_dict(_read(source, "complex"))
    _emit_json(shift(chain_complex(complex_, reduced=reduced), s).to_dict(), out)


@cli.command()
@input_option
@output_option
def poset(source, out):
    """Face poset relation matrix."""
    complex_ = formats.complex_from_dict(_read(source, "complex"))
    _emit_json(formats.poset_to_dict(face_poset(complex_)), out)


@cli.command("validate")
@input_option
@output_option
@click.pass_context
def validate_command(ctx, source, out):
    """Report every violated rule; exit 1 when there is one."""
    complex_ = formats.complex_from_dict(_read(source, "complex"), check=False)
    violations = validate(complex_)
    _emit_json(formats.violations_to_dict(violations), out)
    if violations:
        ctx.exit(1)


@cli.command()
@click.argument("name", type=click.Choice(sorted(EXAMPLES)))
@output_option
def example(name, out):
    """Print a worked example as ideal or complex JSON."""
    value = EXAMPLES[name]()
    if isinstance(value, MonomialIdeal):
        _emit_json(formats.ideal_to_dict(value), out)
    else:
        _emit_json(formats.complex_to_dict(value), out)


@cli.command("gen-random-ideal")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--generators", type=int, default=4, show_default=True)
@click.option("--variables", "nvars", type=int, default=3, show_default=True)
@click.option("--max-exponent", type=int, default=4, show_default=True)
@click.option("--generic", is_flag=True, help="Reject samples until the ideal is generic.")
@output_option
def gen_random_ideal(seed, generators, nvars, max_exponent, generic, out):
    """Random monomial ideal."""
    if generators < 1 or nvars < 1 or max_exponent < 1:
        raise click.BadParameter("generators, variables and max exponent must be positive")
    rng = random.Random(seed)
    ring = default_ring(nvars)
    if generic:
        ideal = random_generic_ideal(rng, generators, nvars, max_exponent, ring=ring)
    else:
        ideal = random_ideal(rng, generators, nvars, max_exponent, ring=ring)
    _emit_json(formats.ideal_to_dict(ideal), out)


def main(argv=None):
    """Run the CLI and return its exit code"""
    try:
        result = cli.main(args=argv, prog_name="cellres", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    except (ParseError, OSError, json.JSONDecodeError) as e:
        click.echo(f"error: {e}", err=True)
        return 2
    except CellResError as e:
        click.echo(f"error: {e}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def run():
    sys.exit(main())
