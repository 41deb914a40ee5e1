"""
Named presets: families, measures, trees and exhaustion rules are looked up
by name with a parameter map, the way the command line and config files
refer to them
"""
import logging
from collections.abc import Callable
from typing import NamedTuple

from frozendict import frozendict

from causets.exceptions import UnknownPreset, UsageError


class Preset(NamedTuple):
    name: str
    factory: Callable
    defaults: frozendict
    description: str


class PresetRegistry:

    def __init__(self, kind: str, presets=()):
        """
        :param kind: what the registry holds ("family", "measure", ...)
        :param presets: Preset tuples to start from
        """
        self.kind = kind
        self.logger = logging.getLogger(f'PresetRegistry[{kind}]')
        self._presets = {}
        for preset in presets:
            self._add(preset)

    def _add(self, preset: Preset):
        if preset.name in self._presets:
            raise ValueError(f'"{preset.name}" already exists in the {self.kind} ' +
                             'registry, cannot add')
        self._presets[preset.name] = preset

    def register(self, name: str, factory: Callable, description: str = '',
                 **defaults):
        """
        Adds a named preset
        :param name: the preset name used on the command line
        :param factory: callable taking the preset parameters as keywords
        :param description: one line shown by listings
        :param defaults: parameter defaults; only these names are accepted
        """
        self.logger.info(f'Registering {self.kind} preset "{name}"')
        self._add(Preset(name, factory, frozendict(defaults), description))
        return factory

    def preset(self, name: str, description: str = '', **defaults):
        """
        Decorator form of register
        """
        def wrap(factory):
            return self.register(name, factory, description, **defaults)
        return wrap

    def __contains__(self, name):
        return name in self._presets

    def __iter__(self):
        return iter(sorted(self._presets))

    def __len__(self):
        return len(self._presets)

    def __getitem__(self, name) -> Preset:
        try:
            return self._presets[name]
        except KeyError:
            raise UnknownPreset(self.kind, name) from None

    def params(self, name: str, **params) -> frozendict:
        """
        The defaults of a preset overlaid with the given parameters
        """
        preset = self[name]
        unknown = sorted(set(params) - set(preset.defaults))
        if unknown:
            raise UsageError(f'Unknown parameter(s) {unknown} for {self.kind} ' +
                             f'"{name}"; accepted: {sorted(preset.defaults)}')
        return preset.defaults | params

    def create(self, name: str, **params):
        """
        Builds the preset
        :param name: preset name
        :param params: overrides of the preset's defaults
        :return: whatever the factory builds
        """
        merged = self.params(name, **params)
        self.logger.debug(f'Creating {self.kind} "{name}" with {dict(merged)}')
        return self[name].factory(**merged)

    def __add__(self, other):
        if not isinstance(other, PresetRegistry):
            raise TypeError('Can only add PresetRegistry objects to ' +
                            'PresetRegistry objects')
        if other.kind != self.kind:
            raise ValueError(f'Cannot combine a {self.kind} registry with a ' +
                             f'{other.kind} registry')
        return PresetRegistry(self.kind, list(self._presets.values()) +
                              list(other._presets.values()))

    def __sub__(self, other):
        names = other if not isinstance(other, PresetRegistry) else other._presets
        return PresetRegistry(self.kind, [p for n, p in self._presets.items()
                                          if n not in names])
