"""Command line interface: one subcommand per library operation, JSON reports on stdout."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence, TypeVar

import yaml
from pydantic import BaseModel, ValidationError

from .documents import (
    DocumentError,
    MatroidDescriptor,
    OrientedDocument,
    PhaseDocument,
    canonical_json,
)
from .fan import MODES
from .fixtures import FixtureCatalog
from .folder import load_data
from .oriented import (
    CocycleError,
    InvalidOrientedMatroidError,
    phase_to_oriented,
    signed_circuits_from_phase,
)
from .orientations import count_orientations
from .phase import InvalidPhaseStructureError, RealPhaseStructure
from .reports import (
    AxiomReport,
    AxiomViolation,
    CountReport,
    ErrorReport,
    FixtureListReport,
    NecklaceClass,
    NecklaceClassesReport,
    SearchReport,
    SignedCircuitReport,
    SubfanReport,
)
from .search import search_phase_structures
from .utils import json_pointer

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_MALFORMED = 2

FIXTURE_PREFIX = 'fixture:'

Document = TypeVar('Document', bound=BaseModel)

REFUTATIONS = (InvalidOrientedMatroidError, InvalidPhaseStructureError, CocycleError)


def emit(report: BaseModel) -> None:
    sys.stdout.write(canonical_json(report))


def read_input(reference: str, document_class: type[Document], catalog: FixtureCatalog) -> Document:
    """
    Read a document from a file or from the fixture catalog.

    Parameters
    ----------
    reference : str
        A JSON or YAML path, or ``fixture:<name>``.
    document_class : type
        The expected document model.
    catalog : FixtureCatalog
        Where ``fixture:`` references are looked up.

    Returns
    -------
    BaseModel
        The validated document.
    """
    if reference.startswith(FIXTURE_PREFIX):
        data = catalog.document(reference[len(FIXTURE_PREFIX):]).model_dump(mode='json')
    else:
        data = load_data(Path(reference))
    return document_class.model_validate(data)


def _labels(value: str | None) -> list[str]:
    if not value:
        return []
    return [label.strip() for label in value.split(',') if label.strip()]


def _verified(structure: RealPhaseStructure) -> bool:
    report = structure.verify()
    if not report.ok:
        emit(report)
    return report.ok


def verify_phase(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    structure = read_input(args.phase, PhaseDocument, catalog).to_structure()
    report = structure.verify()
    if report.ok:
        report.necklaces = structure.verify_necklace().necklaces
    emit(report)
    return EXIT_OK if report.ok else EXIT_REFUTED


def verify_om(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    document = read_input(args.oriented, OrientedDocument, catalog)
    try:
        oriented = document.to_oriented()
    except InvalidOrientedMatroidError as error:
        emit(
            AxiomReport(
                ok=False,
                violations=[AxiomViolation(axiom=error.axiom, witnesses=error.witnesses)],
            )
        )
        return EXIT_REFUTED
    report = oriented.check_axioms()
    if report.ok:
        report = oriented.check_diamond()
    emit(report)
    return EXIT_OK if report.ok else EXIT_REFUTED


def from_oriented(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    oriented = read_input(args.oriented, OrientedDocument, catalog).to_oriented()
    structure = oriented.to_phase(args.mode)
    emit(PhaseDocument.from_structure(structure))
    return EXIT_OK


def to_circuits(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    structure = read_input(args.phase, PhaseDocument, catalog).to_structure()
    if not _verified(structure):
        return EXIT_REFUTED
    circuits = signed_circuits_from_phase(structure)
    emit(SignedCircuitReport(elements=list(circuits.ground), circuits=circuits.to_strings()))
    return EXIT_OK


def to_oriented(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    structure = read_input(args.phase, PhaseDocument, catalog).to_structure()
    if not _verified(structure):
        return EXIT_REFUTED
    emit(OrientedDocument.from_oriented(phase_to_oriented(structure), by=args.by))
    return EXIT_OK


def minor(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    structure = read_input(args.phase, PhaseDocument, catalog).to_structure()
    if not _verified(structure):
        return EXIT_REFUTED
    result = structure.phase_minor(
        delete=_labels(args.delete), contract=_labels(args.contract), check=False
    )
    emit(PhaseDocument.from_structure(result))
    return EXIT_OK


def search_phase(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    descriptor = read_input(args.matroid, MatroidDescriptor, catalog)
    result = search_phase_structures(
        descriptor.to_matroid(),
        mode=args.mode,
        up_to_reorientation=args.up_to_reorientation,
        limit=args.limit,
    )
    emit(
        SearchReport(
            command='search-phase',
            count=len(result),
            complete=result.complete,
            mode=args.mode,
            up_to_reorientation=args.up_to_reorientation,
            structures=[
                PhaseDocument.from_structure(structure, descriptor).model_dump(mode='json')
                for structure in result
            ],
        )
    )
    return EXIT_OK if len(result) else EXIT_REFUTED


def count_orientations_command(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    matroid = read_input(args.matroid, MatroidDescriptor, catalog).to_matroid()
    count = count_orientations(matroid)
    emit(CountReport(command='count-orientations', count=count))
    return EXIT_OK if count else EXIT_REFUTED


def subfan_check(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    inner = read_input(args.inner, PhaseDocument, catalog).to_structure()
    outer = read_input(args.outer, PhaseDocument, catalog).to_structure()
    failing = inner.subfan_failure(outer)
    contained = inner.fan.contains(outer.fan)
    report = SubfanReport(
        fan_contained=contained,
        real_subfan=contained and failing is None,
        failing_face=inner.fan.describe(failing) if failing is not None else None,
    )
    emit(report)
    return EXIT_OK if report.real_subfan else EXIT_REFUTED


def necklace_orderings(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    structure = read_input(args.phase, PhaseDocument, catalog).to_structure()
    report = structure.verify_necklace()
    emit(report)
    return EXIT_OK if report.ok else EXIT_REFUTED


def necklace_classes(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    matroid = read_input(args.matroid, MatroidDescriptor, catalog).to_matroid()
    result = search_phase_structures(matroid, mode=args.mode)
    groups: dict[tuple, list[RealPhaseStructure]] = {}
    for structure in result:
        groups.setdefault(structure.necklace_signature(), []).append(structure)
    classes = []
    for signature, members in groups.items():
        representatives: list[RealPhaseStructure] = []
        for structure in members:
            if all(structure.equal_up_to_reorientation(kept) is None for kept in representatives):
                representatives.append(structure)
        fan = members[0].fan
        classes.append(
            NecklaceClass(
                structures=len(members),
                reorientation_classes=len(representatives),
                necklaces=[
                    {'face': fan.describe(tau), 'ordering': [fan.describe(sigma) for sigma in ordering]}
                    for tau, ordering in signature
                ],
            )
        )
    emit(NecklaceClassesReport(mode=args.mode, structures=len(result), classes=classes))
    return EXIT_OK


def fixtures(args: argparse.Namespace, catalog: FixtureCatalog) -> int:
    if args.show:
        emit(catalog.document(args.show))
    elif args.dump:
        files = catalog.dump(args.dump)
        emit(FixtureListReport(files=[str(file) for file in files]))
    else:
        emit(FixtureListReport(fixtures=catalog.summaries()))
    return EXIT_OK


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace, FixtureCatalog], int], str]] = {
    'verify-phase': (verify_phase, 'Check a phase structure and report its necklace orderings.'),
    'verify-om': (verify_om, 'Check the covector axioms of an oriented matroid.'),
    'from-oriented': (from_oriented, 'Phase structure of an oriented matroid.'),
    'to-circuits': (to_circuits, 'Signed circuits recovered from a phase structure.'),
    'to-oriented': (to_oriented, 'Oriented matroid of a phase structure.'),
    'minor': (minor, 'Delete and contract elements of a phase structure.'),
    'search-phase': (search_phase, 'All phase structures on the fan of a matroid.'),
    'count-orientations': (count_orientations_command, 'Number of orientations of a matroid.'),
    'subfan-check': (subfan_check, 'Whether a phase structure is a real subfan of another.'),
    'necklace-orderings': (necklace_orderings, 'Necklace ordering at every codimension-one face.'),
    'necklace-classes': (necklace_classes, 'Group all phase structures by their necklace orderings.'),
    'fixtures': (fixtures, 'List, show or write the bundled fixtures.'),
}


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns
    -------
    argparse.ArgumentParser
        The parser with one subparser per command.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--mode', choices=MODES, default='affine', help='fan to work on (default: affine)')
    common.add_argument('--output', choices=['json'], default='json', help='report format')
    common.add_argument('-v', '--verbose', action='store_true', help='log debug messages to stderr')

    parser = argparse.ArgumentParser(
        prog='phasefan', description='Real phase structures on matroid fans and oriented matroids.'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    commands = {}
    for name, (_, summary) in COMMANDS.items():
        commands[name] = subparsers.add_parser(name, parents=[common], help=summary, description=summary)

    for name in ('verify-phase', 'to-circuits', 'to-oriented', 'minor', 'necklace-orderings'):
        commands[name].add_argument('phase', help='phase structure document or fixture:NAME')
    for name in ('verify-om', 'from-oriented'):
        commands[name].add_argument('oriented', help='oriented matroid document or fixture:NAME')
    for name in ('search-phase', 'count-orientations', 'necklace-classes'):
        commands[name].add_argument('matroid', help='matroid descriptor or fixture:NAME')

    commands['to-oriented'].add_argument(
        '--by', choices=['topes', 'signed_circuits', 'covectors'], default='topes'
    )
    commands['minor'].add_argument('--delete', help='comma separated labels')
    commands['minor'].add_argument('--contract', help='comma separated labels')
    commands['search-phase'].add_argument('--up-to-reorientation', action='store_true')
    commands['search-phase'].add_argument('--limit', type=int, default=None)
    commands['subfan-check'].add_argument('inner', help='the candidate subfan')
    commands['subfan-check'].add_argument('outer', help='the containing structure')

    listing = commands['fixtures'].add_mutually_exclusive_group()
    listing.add_argument('--list', action='store_true', help='list the documents (default)')
    listing.add_argument('--show', metavar='NAME', help='print one document')
    listing.add_argument('--dump', metavar='DIR', help='write every document to DIR')
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line.

    Parameters
    ----------
    argv : Sequence[str], optional
        The arguments, by default ``sys.argv[1:]``.

    Returns
    -------
    int
        0 on success, 1 when the input is refuted, 2 when it is malformed.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    handler, _ = COMMANDS[args.command]
    try:
        return handler(args, FixtureCatalog())
    except ValidationError as error:
        problems = [
            {'pointer': json_pointer(detail['loc']), 'message': detail['msg']}
            for detail in error.errors()
        ]
        emit(ErrorReport(error='invalid document', problems=problems))
    except DocumentError as error:
        emit(ErrorReport(error='invalid document', problems=[{'pointer': error.pointer, 'message': error.message}]))
    except REFUTATIONS as error:
        LOG.debug('Refuted: %s', error)
        emit(ErrorReport(error=str(error)))
        return EXIT_REFUTED
    except (ValueError, KeyError, OSError, yaml.YAMLError) as error:
        emit(ErrorReport(error=str(error)))
    return EXIT_MALFORMED
