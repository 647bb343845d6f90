#!/usr/bin/env python

from setuptools import setup, find_packages
from setuptools.depends import get_module_constant

# Get the version from within pldl. It's defined in exactly one place.
version = get_module_constant("pldl", "__version__")

readme = open('README.rst').read() + '\n\n' + open('CHANGELOG.rst').read()

setup(name='pldl',
      version=version,
      description='Model checking and realizability for Parametric Linear Dynamic Logic.',
      include_package_data=True,
      license='MIT',
      keywords='temporal logic model checking synthesis automata',
      long_description=readme,
      packages=find_packages(exclude=['test', 'test.*']),
      python_requires='>=3.7',
      install_requires=[
          'parso>=0.8.0,<0.9.0',
          'networkx>=2.4',
          # the command line
          'docopt',
          # colored debug output
          'colorama',
      ],
      extras_require={
          'testing': [
              'pytest<8.0.0',
          ],
          'qa': [
              'flake8',
              'mypy',
          ],
      },
      entry_points={
          'console_scripts': ['pldl = pldl.__main__:main'],
      },
      platforms=['any'],
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: MIT License',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering',
      ],
      )
