"""Represents a folder of JSON and YAML documents in the filesystem."""

import json
from pathlib import Path
from typing import Iterator, Type, TypeVar

import yaml
from pydantic import BaseModel

from .documents import canonical_json

Document = TypeVar('Document', bound=BaseModel)

SUFFIXES = ('.json', '.yaml', '.yml')


def load_data(file: Path | str) -> object:
    """
    Read the raw content of a JSON or YAML file.

    Parameters
    ----------
    file : Path | str
        The file; ``.yaml`` and ``.yml`` files are read as YAML, anything else as JSON.

    Returns
    -------
    object
        The decoded content.
    """
    file = Path(file)
    with file.open('r') as fp:
        if file.suffix in ('.yaml', '.yml'):
            return yaml.safe_load(fp)
        return json.load(fp)


class Folder:
    """
    Represents a folder of documents.

    Attributes
    ----------
    path : Path
        The Path object of the folder.
    """

    def __init__(self, folder_path: Path | str, create: bool = True):
        """
        Initialize a folder.

        Parameters
        ----------
        folder_path : Path | str
            The path of the folder.
        create : bool, optional
            Whether to create the folder if it does not exist, by default True.
        """
        self.path = Path(folder_path)
        if create:
            self.create()

    def __repr__(self):
        state = 'exists' if self.exists() else 'non-existent'
        return f'Folder(path={self.path} {state})'

    def exists(self) -> bool:
        return self.path.exists() and self.path.is_dir()

    def create(self):
        self.path.mkdir(parents=True, exist_ok=True)

    def _file(self, filename: str | Path) -> Path:
        return filename if isinstance(filename, Path) else self.path / filename

    def for_each(self, glob: str = '*', recursive: bool = False) -> Iterator[Path]:
        """
        Iterate over each document file in the folder, in name order.

        Parameters
        ----------
        glob : str, optional
            The glob pattern to use to find files, by default "*".
        recursive : bool, optional
            Whether to search recursively, by default False.

        Yields
        ------
        Path
            Each file with a JSON or YAML suffix.
        """
        if recursive:
            glob = f'**/{glob}'
        for file in sorted(self.path.glob(glob)):
            if file.is_file() and file.suffix in SUFFIXES:
                yield file

    def read_document(self, filename: str | Path, document_class: Type[Document]) -> Document:
        """
        Read and validate a document.

        Parameters
        ----------
        filename : str | Path
            The file, relative to the folder unless a Path.
        document_class : type
            The pydantic model to validate against.

        Returns
        -------
        BaseModel
            The document.

        Raises
        ------
        pydantic.ValidationError
            If the content does not match the model.
        """
        return document_class.model_validate(load_data(self._file(filename)))

    def write_document(self, filename: str | Path, document: BaseModel) -> Path:
        """
        Write a document as canonical JSON, or YAML for a YAML suffix.

        Parameters
        ----------
        filename : str | Path
            The file, relative to the folder unless a Path.
        document : BaseModel
            The document.

        Returns
        -------
        Path
            The file written.
        """
        file = self._file(filename)
        with file.open('w') as fp:
            if file.suffix in ('.yaml', '.yml'):
                yaml.safe_dump(document.model_dump(mode='json'), fp, sort_keys=False)
            else:
                fp.write(canonical_json(document))
        return file
