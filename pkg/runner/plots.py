"""Line and image plots written next to the tables."""
import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

# no timestamps or version strings in the files
PNG_METADATA = {'Software': None}


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=PNG_METADATA)
    plt.close(fig)
    return path


def plot_curves(path, x, curves, xlabel, ylabel, title=None, errors=None,
                logy=False):
    """One line per entry of ``curves`` (label -> values).

    ``errors`` optionally maps labels to symmetric error bars.
    """
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, y in curves.items():
        y = np.asarray(y, dtype=float)
        if errors and label in errors:
            ax.errorbar(x, y, yerr=errors[label], fmt='o', ms=3, label=label)
        else:
            ax.plot(x, y, '-', label=label)
    if logy:
        ax.set_yscale('log')
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.legend()
    return _save(fig, path)


def plot_field(path, sample, title=None):
    """Field values on their patch, zero set in black."""
    h = sample.patch.half_width
    extent = (-h, h, -h, h)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.imshow(sample.values.T, origin='lower', extent=extent, cmap='RdBu_r')
    ax.contour(sample.patch.axis, sample.patch.axis, sample.values.T,
               levels=[0.0], colors='k', linewidths=0.5)
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_histogram(path, values, title=None, bins=80):
    """Value histogram against the standard normal density."""
    values = np.asarray(values, dtype=float)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(values, bins=bins, density=True, alpha=0.6, label='samples')
    x = np.linspace(-4.0, 4.0, 401)
    ax.plot(x, np.exp(-x * x / 2) / np.sqrt(2 * np.pi), 'k-', label='N(0, 1)')
    if title:
        ax.set_title(title)
    ax.legend()
    return _save(fig, path)
