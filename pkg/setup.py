from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [Extension("nhstab._kernels", ["src/nhstab/_kernels.pyx"])]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": 3}))
