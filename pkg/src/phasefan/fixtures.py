"""Class to represent the catalog of bundled example matroids."""

import logging
from pathlib import Path
from typing import Iterator

import yaml
from pydantic import BaseModel, Field

from .documents import MatroidDescriptor, OrientedDocument, PhaseDocument
from .folder import Folder
from .matroid import Matroid
from .oriented import OrientedMatroid
from .phase import RealPhaseStructure
from .reports import FixtureSummary

LOG = logging.getLogger(__name__)

FIXTURE_FILE = Path(__file__).parent / 'fixtures.yaml'


class FixtureEntry(BaseModel):
    """One bundled matroid, with an orientation when it has one."""

    name: str = Field(min_length=1)
    description: str = ''
    matroid: MatroidDescriptor
    oriented: OrientedDocument | None = None


class FixtureCatalog:
    """
    The bundled fixtures.

    Every entry is available as a matroid descriptor named after the entry and,
    when oriented, as an oriented-matroid document named ``<name>_oriented``.
    The phase structures of ``derived_phases`` are computed from the oriented
    matroids on demand.

    Attributes
    ----------
    data_file : Path
        The YAML file the entries are read from.
    entries : dict[str, FixtureEntry]
        The entries by name, in file order.
    """

    derived_phases = {
        'u11_phase': {'fixture': 'u11', 'mode': 'affine'},
        'u12_phase': {'fixture': 'u12', 'mode': 'affine'},
        'u23_phase': {'fixture': 'u23', 'mode': 'projective'},
        'u24_phase': {'fixture': 'u24', 'mode': 'projective'},
        'u34_phase': {'fixture': 'u34', 'mode': 'affine'},
        'u35_phase': {'fixture': 'u35', 'mode': 'affine'},
        'n_phase': {'fixture': 'n', 'mode': 'affine'},
        'k4_phase': {'fixture': 'k4', 'mode': 'affine'},
    }

    def __init__(self, data_file: Path | str | None = None):
        """
        Load the catalog.

        Parameters
        ----------
        data_file : Path | str, optional
            A YAML list of entries, by default the file shipped with the package.
        """
        self.data_file = Path(data_file) if data_file is not None else FIXTURE_FILE
        with self.data_file.open('r') as fp:
            raw = yaml.safe_load(fp) or []
        self.entries: dict[str, FixtureEntry] = {}
        for item in raw:
            entry = FixtureEntry.model_validate(item)
            if entry.name in self.entries:
                raise ValueError(f'Fixture {entry.name!r} defined twice in {self.data_file}')
            self.entries[entry.name] = entry
        self._matroids: dict[str, Matroid] = {}
        self._oriented: dict[str, OrientedMatroid] = {}
        LOG.debug('Loaded %d fixtures from %s', len(self.entries), self.data_file)

    def __repr__(self):
        return f'FixtureCatalog({self.data_file}, {len(self.entries)} entries)'

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self.names()

    def names(self) -> list[str]:
        """
        Every document name the catalog can produce.

        Returns
        -------
        list[str]
            Matroids, then oriented matroids, then derived phase structures.
        """
        names = list(self.entries)
        names += [f'{name}_oriented' for name, entry in self.entries.items() if entry.oriented]
        names += [name for name, derived in self.derived_phases.items() if derived['fixture'] in self.entries]
        return names

    def entry(self, name: str) -> FixtureEntry:
        try:
            return self.entries[name]
        except KeyError:
            raise KeyError(f'Unknown fixture {name!r}, available: {list(self.entries)}') from None

    def matroid(self, name: str) -> Matroid:
        if name not in self._matroids:
            self._matroids[name] = self.entry(name).matroid.to_matroid()
        return self._matroids[name]

    def oriented(self, name: str) -> OrientedMatroid:
        """
        The orientation bundled with a fixture.

        Parameters
        ----------
        name : str
            The fixture name.

        Returns
        -------
        OrientedMatroid
            The oriented matroid.

        Raises
        ------
        KeyError
            If the fixture has no orientation.
        """
        if name not in self._oriented:
            document = self.entry(name).oriented
            if document is None:
                raise KeyError(f'Fixture {name!r} has no orientation')
            self._oriented[name] = document.to_oriented()
        return self._oriented[name]

    def phase(self, name: str) -> RealPhaseStructure:
        """
        A derived phase structure.

        Parameters
        ----------
        name : str
            A key of ``derived_phases``.

        Returns
        -------
        RealPhaseStructure
            The structure of the fixture's orientation in the listed mode.
        """
        if name not in self.derived_phases:
            raise KeyError(f'Unknown phase structure {name!r}, available: {list(self.derived_phases)}')
        derived = self.derived_phases[name]
        return self.oriented(derived['fixture']).to_phase(derived['mode'])

    def document(self, name: str) -> BaseModel:
        """
        The document of a name from ``names()``.

        Parameters
        ----------
        name : str
            A fixture name, ``<fixture>_oriented`` or a derived phase name.

        Returns
        -------
        BaseModel
            A MatroidDescriptor, OrientedDocument or PhaseDocument.
        """
        if name in self.entries:
            return self.entries[name].matroid
        if name in self.derived_phases:
            descriptor = self.entry(self.derived_phases[name]['fixture']).matroid
            return PhaseDocument.from_structure(self.phase(name), descriptor)
        if name.endswith('_oriented') and name[: -len('_oriented')] in self.entries:
            document = self.entries[name[: -len('_oriented')]].oriented
            if document is not None:
                return document
        raise KeyError(f'Unknown fixture document {name!r}')

    def summaries(self) -> list[FixtureSummary]:
        """
        Name, kind and description of every document.

        Returns
        -------
        list[FixtureSummary]
            In the order of `names()`.
        """
        summaries = []
        for name in self.names():
            if name in self.entries:
                summaries.append(FixtureSummary(name=name, kind='matroid', description=self.entries[name].description))
            elif name in self.derived_phases:
                derived = self.derived_phases[name]
                summaries.append(
                    FixtureSummary(name=name, kind='phase', description=f'{derived["mode"]} phase structure of {derived["fixture"]}')
                )
            else:
                fixture = name[: -len('_oriented')]
                summaries.append(FixtureSummary(name=name, kind='oriented', description=f'orientation of {fixture}'))
        return summaries

    def documents(self) -> Iterator[tuple[str, BaseModel]]:
        for name in self.names():
            yield name, self.document(name)

    def dump(self, folder: Folder | Path | str) -> list[Path]:
        """
        Write every document as ``<name>.json``.

        Parameters
        ----------
        folder : Folder | Path | str
            The target folder, created if missing.

        Returns
        -------
        list[Path]
            The files written.
        """
        if not isinstance(folder, Folder):
            folder = Folder(folder)
        return [folder.write_document(f'{name}.json', document) for name, document in self.documents()]
