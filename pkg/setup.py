#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('docs/history.rst') as history_file:
    history = history_file.read()

requirements = [
    'numpy >= 1.19.1',
    'scipy >= 1.5.0',
    'pandas >= 1.1.1',
    'Click >= 7.0']

setup_requirements = []

test_requirements = ['pytest >= 6.0']

setup(
    author="pyNDisc developers",
    author_email='pyndisc@users.noreply.github.com',
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: System :: Networking',
    ],
    description="Schedules, coverage checks and latency bounds for "
                "duty-cycled neighbor discovery",
    entry_points={
        'console_scripts': [
            'pyndisc=pyndisc.cli:main',
        ],
    },
    install_requires=requirements,
    license="BSD license",
    long_description_content_type='text/x-rst',
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords=['Neighbor discovery', 'Duty cycle', 'Wireless sensor networks',
              'Latency bounds', 'Python'],
    name='pyndisc',
    packages=find_packages(include=['pyndisc', 'pyndisc.*']),
    setup_requires=setup_requirements,
    test_suite='tests',
    tests_require=test_requirements,
    version='0.1.0',
    zip_safe=False,
)
