"""
Shared plumbing for the laboratory's management commands.

Every command validates its flags through a DRF serializer before doing
any work. Option values are merged with the precedence
explicit flag > --config file > settings.DIOPHANTINE_LAB default.
Errors map onto exit statuses: 2 for usage and I/O problems, 1 for a
mathematical inconsistency or a failed certificate.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from core.exceptions import CertificateError, InconsistencyError, LabError
from core.utils import ConfigFileError, atomic_write, read_config_file

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
INCONSISTENT = 1


class LabOptionsSerializer(serializers.Serializer):
    """
    Base serializer for command options shared by every command.
    """
    threads = serializers.IntegerField(min_value=1)


def format_errors(errors) -> str:
    """Flatten serializer errors into one line per field."""
    lines = []
    for field, messages in errors.items():
        if isinstance(messages, dict):
            messages = [f"{key}: {value}" for key, value in messages.items()]
        text = '; '.join(str(message) for message in messages)
        lines.append(f"--{field.replace('_', '-')}: {text}" if field != 'non_field_errors' else text)
    return '\n'.join(lines)


class LabCommand(BaseCommand):
    """
    Base class for laboratory commands.

    Subclasses set options_serializer_class, add their own flags with
    default=None and implement run(params).
    """
    options_serializer_class = LabOptionsSerializer

    def add_arguments(self, parser):
        parser.add_argument(
            '--config',
            help='Plain-text key=value file with flag names as keys'
        )
        parser.add_argument(
            '--threads',
            type=int,
            default=None,
            help='Worker processes for parallel stages (default from settings)'
        )

    def get_defaults(self) -> Dict[str, Any]:
        return {'threads': settings.DIOPHANTINE_LAB['WORKERS']}

    def resolve_options(self, options: Dict[str, Any]) -> Dict[str, Any]:
        """
        Merge defaults, config file and explicit flags, then validate.

        Raises:
            CommandError: with returncode 2 on any invalid value
        """
        fields = self.options_serializer_class().fields
        merged = {key: value for key, value in self.get_defaults().items() if key in fields}

        config_path = options.get('config')
        if config_path:
            try:
                file_values = read_config_file(config_path)
            except (ConfigFileError, OSError) as exc:
                raise CommandError(f"Cannot read config file: {exc}", returncode=USAGE_ERROR)
            unknown = sorted(set(file_values) - set(fields))
            if unknown:
                raise CommandError(
                    f"Unknown keys in {config_path}: {', '.join(unknown)}",
                    returncode=USAGE_ERROR,
                )
            merged.update(file_values)

        for name in fields:
            if options.get(name) is not None:
                merged[name] = options[name]

        serializer = self.options_serializer_class(data=merged)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=USAGE_ERROR)
        params = dict(serializer.validated_data)
        logger.debug(f"{self.__class__.__module__} options: {params}")
        return params

    def handle(self, *args, **options):
        params = self.resolve_options(options)
        try:
            self.run(params)
        except (InconsistencyError, CertificateError) as exc:
            logger.error(f"Inconsistency: {exc}")
            raise CommandError(str(exc), returncode=INCONSISTENT)
        except LabError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except OSError as exc:
            raise CommandError(f"I/O failure: {exc}", returncode=USAGE_ERROR)

    def run(self, params: Dict[str, Any]) -> None:
        raise NotImplementedError('subclasses of LabCommand must provide a run() method')

    def write_output(self, path: Optional[str], data) -> Optional[Path]:
        """Write data atomically when a path was given."""
        if not path:
            return None
        target = atomic_write(path, data)
        logger.info(f"Wrote {target}")
        return target
