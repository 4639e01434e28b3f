"""Build script for the optional compiled evaluation core.

The package is fully functional without the extension: rsquad.backend
falls back to a vectorized numpy evaluator when the compiled module is
missing, so a failed compile only costs speed, never correctness.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the Cython core if possible, install pure-Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        import warnings

        warnings.warn(
            "could not build the compiled evaluation core (%s); "
            "rsquad will use the pure-Python backend" % (exc,)
        )


extensions = [
    Extension(
        "rsquad.backend._evalcore",
        ["src/rsquad/backend/_evalcore.pyx"],
        extra_compile_args=["-O3"],
    )
]

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
